use hankel_core::regions::RegionId;
use hankel_core::sampling::stream_rng;
use hankel_core::search::{grid_maximize, write_lattice_csv, SearchBox};
use hankel_core::theta::{dtheta_dw_raw, theta_gradient, theta_raw, BoxPoint, BOX_UPPER};
use rand::Rng;

#[test]
fn restrictions_agree_with_theta() {
    let mut rng = stream_rng(11, 0);
    for r in RegionId::all() {
        let res = r.restriction();
        for _ in 0..1000 {
            let t = [rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>()];
            let p = r.embed(t);
            assert_eq!(RegionId::classify(&p), r, "{p:?}");
            let direct = theta_raw(&p[0], &p[1], &p[2]);
            assert!(((res.eval)(&p) - direct).abs() <= 1e-12 * (1.0 + direct.abs()), "{r} at {p:?}");
        }
        let at = r.embed(res.argmax);
        assert!((theta_raw(&at[0], &at[1], &at[2]) - res.max).abs() <= 1e-9, "{r}");
    }
}

#[test]
fn u_zero_face_majorization() {
    let mut rng = stream_rng(12, 0);
    for _ in 0..1000 {
        let (v, w): (f64, f64) = (rng.random(), rng.random());
        let mid = 240.0 - 192.0 * v * v + 64.0 * v.powi(3) - 48.0 * v.powi(4);
        assert!(theta_raw(&0.0, &v, &w) <= mid + 1e-10);
        assert!(mid <= 240.0 + 1e-10);
    }
}

#[test]
fn theta_nonnegative_and_vanishes_at_u_two() {
    let n = 48;
    for i in 0..=n {
        for j in 0..=n {
            for k in 0..=n {
                let p = [2.0 * i as f64 / n as f64, j as f64 / n as f64, k as f64 / n as f64];
                assert!(theta_raw(&p[0], &p[1], &p[2]) >= 0.0, "{p:?}");
            }
            assert_eq!(theta_raw(&2.0, &(i as f64 / n as f64), &(j as f64 / n as f64)), 0.0);
        }
    }
}

#[test]
fn maximum_monotone_in_resolution() {
    let coarse = grid_maximize(64, 0).unwrap().global_max;
    let fine = grid_maximize(128, 0).unwrap().global_max;
    assert!(fine >= coarse - 1e-12);
    assert!((grid_maximize(2, 0).unwrap().global_max - 240.0).abs() <= 1e-9);
}

#[test]
fn derivative_matches_finite_differences() {
    let mut rng = stream_rng(13, 0);
    let h = 1e-6;
    for _ in 0..1000 {
        let (u, v, w) = (2.0 * rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>());
        let fd = (theta_raw(&u, &v, &(w + h)) - theta_raw(&u, &v, &(w - h))) / (2.0 * h);
        assert!((dtheta_dw_raw(&u, &v, &w) - fd).abs() <= 1e-5 * (1.0 + fd.abs()));
        let g = theta_gradient(u, v, w);
        let fu = (theta_raw(&(u + h), &v, &w) - theta_raw(&(u - h), &v, &w)) / (2.0 * h);
        let fv = (theta_raw(&u, &(v + h), &w) - theta_raw(&u, &(v - h), &w)) / (2.0 * h);
        assert!((g[0] - fu).abs() <= 1e-5 * (1.0 + fu.abs()));
        assert!((g[1] - fv).abs() <= 1e-5 * (1.0 + fv.abs()));
    }
}

#[test]
fn box_points_reject_outside() {
    assert!(BoxPoint::new(2.0 + 1e-15, 0.0, 0.0).is_err());
    assert!(BoxPoint::new(0.0, -1e-300, 0.0).is_err());
    assert!(BoxPoint::new(f64::NAN, 0.0, 0.0).is_err());
    assert!(BoxPoint::new(BOX_UPPER[0], BOX_UPPER[1], BOX_UPPER[2]).is_ok());
}

#[test]
fn lattice_dump_has_every_point() {
    let mut buf = Vec::new();
    write_lattice_csv(&SearchBox::full(), 4, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("u,v,w,theta"));
    assert_eq!(lines.count(), 125);
}
