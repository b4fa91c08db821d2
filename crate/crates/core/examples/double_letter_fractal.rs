//! The double-letter rule draws W_n as the Fibonacci word fractal.

use fibword::fractal::vector_sequence;
use fibword::turtle::{half_turn_symmetry, self_intersections, trace, DrawingRule};
use fibword::word::trim_last_two;

fn main() -> fibword::Result<()> {
    let rule = DrawingRule::double_letter();
    let rec = vector_sequence(19)?;
    for n in [4, 7, 10, 13, 16, 19] {
        let p = trace(&trim_last_two(n)?, &rule)?;
        let d = p.integer_displacement().unwrap();
        let r = rec.iter().find(|(k, _)| *k == n).unwrap().1;
        let s = half_turn_symmetry(&p);
        let x = self_intersections(&p);
        let bb = p.bounding_box();
        println!(
            "W_{n:<2} tiles {:>5} displacement {:?} recurrence {:?} bbox {}x{} symmetric {} crossings {} overlaps {}",
            p.tokens.len(),
            d,
            r,
            bb.width(),
            bb.height(),
            s.symmetric,
            x.proper_crossings,
            x.collinear_overlaps
        );
    }
    Ok(())
}
