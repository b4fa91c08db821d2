//! Writes SVG drawings to the directory given as the first argument (default: current).

use std::path::PathBuf;

use fibword::fractal::fit_diagonal_rectangle;
use fibword::render::{render_deviation_svg, render_growth_svg, render_path_svg, Overlays, RenderStyle};
use fibword::turtle::{growth_chart, half_turn_symmetry, trace, DrawingRule};
use fibword::word::{fib_word, trim_last_two};

fn main() -> fibword::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let style = RenderStyle::default();
    let save = |name: &str, body: String| {
        let path = dir.join(name);
        std::fs::write(&path, body).expect("write svg");
        println!("wrote {}", path.display());
    };

    let p = trace(&trim_last_two(16)?, &DrawingRule::double_letter())?;
    let overlays = Overlays { rectangle: Some(fit_diagonal_rectangle(&p)?), center: Some(half_turn_symmetry(&p).center) };
    save("w16_double_letter.svg", render_path_svg(&p, &RenderStyle { scale: 4.0, ..style.clone() }, &overlays)?);

    let p = trace(&fib_word(12), &DrawingRule::generalized(137.5))?;
    save("f12_firehose.svg", render_path_svg(&p, &style, &Overlays::default())?);

    let p = trace(&fib_word(12), &DrawingRule::odd_even(0))?;
    save("f12_odd_even.svg", render_path_svg(&p, &style, &Overlays::default())?);

    save("f7_deviation.svg", render_deviation_svg(&fib_word(7), 0.4, true, &RenderStyle { scale: 20.0, ..style.clone() })?);
    save("growth.svg", render_growth_svg(&growth_chart(20, false), &style, 24)?);
    Ok(())
}
