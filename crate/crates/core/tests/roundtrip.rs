use hankel_core::cli::{run, Command, Report, RunConfig};
use hankel_core::identity::{h31_bracket, inverse_coeff_polys};
use hankel_core::poly::MultiPoly;
use hankel_core::scalar::{rat, CoeffText, ExactScalar};
use hankel_core::series::TruncatedSeries;
use num_complex::Complex;

const POLYS: &str = include_str!("golden/polys.txt");

#[test]
fn polynomial_golden_file() {
    let lines: Vec<&str> = POLYS.lines().collect();
    let t = inverse_coeff_polys();
    for (p, line) in t.iter().zip(&lines) {
        assert_eq!(p.to_text(), *line);
        assert_eq!(&MultiPoly::parse_text(line).unwrap(), p);
    }
    assert_eq!(h31_bracket().to_text(), lines[4]);
    let inv = TruncatedSeries::<ExactScalar>::geometric(5).revert().unwrap();
    assert_eq!(inv.to_text(), lines[5]);
    assert_eq!(TruncatedSeries::parse_text(lines[5]).unwrap(), inv);
}

#[test]
fn zero_polynomial_round_trips() {
    let z = MultiPoly::zero(&["c1", "c2"]);
    assert_eq!(MultiPoly::parse_text(&z.to_text()).unwrap(), z);
}

#[test]
fn scalar_text() {
    let z = Complex::new(rat(-3, 4), rat(5, 6));
    assert_eq!(Complex::<ExactScalar>::parse_text(&z.to_text()).unwrap(), z);
    assert_eq!(rat(6, 8).to_text(), "3/4");
    assert_eq!(ExactScalar::parse_text("-10/4").unwrap(), rat(-5, 2));
    assert!(ExactScalar::parse_text("1/0").is_err());
    assert!(TruncatedSeries::<ExactScalar>::parse_text("series[3] 0/1 1/1").is_err());
}

fn report_for(command: Command) -> Report {
    run(&RunConfig::new(command)).unwrap().report
}

#[test]
fn reports_match_golden_json() {
    for (command, golden) in [
        (Command::Extremal, include_str!("golden/extremal.json")),
        (Command::Identity, include_str!("golden/identity.json")),
    ] {
        let report = report_for(command);
        let text = serde_json::to_string_pretty(&report).unwrap() + "\n";
        assert_eq!(text, golden, "{command:?}");
        let back: Report = serde_json::from_str(golden).unwrap();
        assert_eq!(back, report);
    }
}
