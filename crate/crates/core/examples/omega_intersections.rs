//! Ω words under the F/L/R turtle and their self-contacts.

use fibword::turtle::{self_intersections, trace, DrawingRule};
use fibword::word::{Substitution, Word};

fn main() -> fibword::Result<()> {
    let rule = DrawingRule::omega();
    let omega = Substitution::omega();
    let prefix = "FLFRFRFLFRFRFLFRFRFLFR";
    for w in [prefix.to_string(), format!("{prefix}F")] {
        let r = self_intersections(&trace(&w.as_str().into(), &rule)?);
        println!("{w:<24} crossings {} overlaps {} touches {}", r.proper_crossings, r.collinear_overlaps, r.vertex_touches);
    }
    for n in 1..=4 {
        let w = omega.iterate(&Word::new("F"), n)?;
        let p = trace(&w, &rule)?;
        let r = self_intersections(&p);
        println!(
            "Ω^{n}(F): {} letters, displacement {:?}, crossings {} overlaps {} touches {}",
            w.len(),
            p.integer_displacement().unwrap(),
            r.proper_crossings,
            r.collinear_overlaps,
            r.vertex_touches
        );
    }
    Ok(())
}
