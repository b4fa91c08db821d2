//! Similarity, box-counting and periodic-approximation dimensions.

use fibword::fractal::{
    bbox_ratio_limit, box_count_dimension, limit_dimension, periodic_approx, scale_ratio, similarity_dimension,
    similarity_dimension_ratio, DEFAULT_SCALES,
};
use fibword::phi::PHI;
use fibword::turtle::{trace, DrawingRule};
use fibword::word::trim_last_two;

fn main() -> fibword::Result<()> {
    println!("limit dimension {:.6}", limit_dimension());
    println!("phi^3 copies at 1+√2: {:.6}", similarity_dimension(PHI.powi(3), 1.0 + 2f64.sqrt())?.dimension);
    println!("quadric Koch, 8 copies at 1/4: {}", similarity_dimension_ratio(8.0, 0.25)?.dimension);

    for n in [13, 19, 25, 31, 37, 43, 49] {
        println!("scale ratio n={n}: {:.9}", scale_ratio(n)?);
    }
    for n in [7, 13, 19] {
        let f = bbox_ratio_limit(n)?;
        println!("W_{n} fitted rectangle {:.6} at {:.3}°, axis-aligned {:.6}", f.ratio, f.angle, f.axis_ratio);
    }

    let p = trace(&trim_last_two(19)?, &DrawingRule::double_letter())?;
    let b = box_count_dimension(&p, &DEFAULT_SCALES)?;
    println!("box count W_19: {:.4} (counts {:?})", b.estimate, b.counts);
    println!("scales {{8,4,2,1,0.5}}: {:?}", box_count_dimension(&p, &[8.0, 4.0, 2.0, 1.0, 0.5]).err());

    for k in [7, 13, 19, 25, 31] {
        let a = periodic_approx(k)?;
        println!("F_{k}: {} segments, scale {}, dimension {:.4}", a.segments, a.scale, a.dimension);
    }
    Ok(())
}
