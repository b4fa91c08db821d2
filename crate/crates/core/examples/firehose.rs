//! Net heading drift of the generalized rule and the fire-hose angle.

use fibword::turtle::{find_firehose_angle, net_heading_drift};
use fibword::word::fib_word;

fn main() -> fibword::Result<()> {
    let f12 = fib_word(12);
    for a in [120.0, 130.0, 135.0, 137.5, 140.0, 145.0, 180.0] {
        println!("{a:>6}°  drift {:+.6} °/unit", net_heading_drift(&f12, a)?);
    }
    let s = find_firehose_angle(&f12, 130.0, 145.0)?;
    println!("root {:.3}° in [{:.3}, {:.3}] after {} steps", s.angle, s.lo, s.hi, s.iterations);
    println!("golden angle 360/φ² = {:.3}°", 360.0 / (fibword::phi::PHI * fibword::phi::PHI));
    Ok(())
}
