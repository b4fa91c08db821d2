//! The one-dimensional to-and-fro walk: displacement classes, excursions, deviation.

use fibword::turtle::{deviation_diagram, max_deviation, trace_1d, zero_excursions};
use fibword::word::fib_word;
use fibword::wordstruct::{direction_parity, displacement_class, track_components};

fn main() -> fibword::Result<()> {
    for n in 1..=12 {
        let c = displacement_class(n)?;
        let t = trace_1d(&fib_word(n))?;
        println!("F_{n:<2} ends at {:<12} {:?} ({})", t.final_position().to_string(), direction_parity(n), c.source);
    }

    println!("running displacement through F_15:");
    for r in track_components(5) {
        println!("  F_{:<2} {:>12}", r.component, r.running_displacement.to_string());
    }
    for d in 1..=4usize {
        println!("max deviation of F_{} = {}", 3 * (d + 1), max_deviation(3 * (d + 1)));
    }

    for rev in [false, true] {
        let r = zero_excursions(&fib_word(11), rev)?;
        let tiles: Vec<usize> = r.structures.iter().map(|s| s.tiles).collect();
        println!("F_11 structures (identify reversal {rev}): {tiles:?}");
    }

    let d = deviation_diagram(&fib_word(7), 0.4)?;
    println!("deviation diagram of F_7: {} points, total drop {}", d.polyline.len(), d.total_drop);
    Ok(())
}
