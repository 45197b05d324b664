//! Closed-form restrictions of theta to the 27 faces, edges and vertices of the box.
use hankel_core::regions::RegionId;
use hankel_core::theta::theta_raw;

fn main() {
    for r in RegionId::all() {
        let res = r.restriction();
        let p = r.embed(res.argmax);
        let direct = theta_raw(&p[0], &p[1], &p[2]);
        println!("{:<24} max {:>14.9} direct {:>14.9}  {}", r.to_string(), res.max, direct, res.formula);
    }
}
