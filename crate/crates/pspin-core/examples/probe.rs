use pspin_core::rational::{int, rat};
use pspin_core::one_point::one_point_ns;
fn main() {
    for p in [int(2), int(3), int(4), int(5), int(6), int(-2), rat(3, 2)] {
        match one_point_ns(&p, 3) {
            Ok(r) => println!("p={p}: ok, {} records", r.len()),
            Err(e) => println!("p={p}: ERROR {e}"),
        }
    }
}
