//! Command-line front end. Exit codes: 0 success, 1 illegal verdict, 2 usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fractal::{self, DEFAULT_SCALES};
use crate::legality::{legality, BoundedFactor};
use crate::phi::PhiNum;
use crate::render::{self, Overlays, RenderStyle};
use crate::report::{self, envelope, phi_value, to_value, Conventions};
use crate::spectral;
use crate::turtle::{self, DrawingRule, Path};
use crate::word::{self, fib_word, Substitution, Word};
use crate::wordstruct;

#[derive(Parser, Debug)]
#[command(name = "fibword", version, about = "Fibonacci word toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Identify time-reversed excursions as the same structure.
    #[arg(long, global = true)]
    pub identify_reversal: bool,
    /// Number given to the first letter by the odd-even rule.
    #[arg(long, global = true, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub parity_base: u8,
}

#[derive(Args, Debug, Clone)]
pub struct WordArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub word: Option<String>,
    /// Which word of index n: f = F_n, w = W_n, t = T_n, fstar = F*_n.
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    F,
    W,
    T,
    Fstar,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a Fibonacci word.
    Gen(WordArgs),
    /// Decide legality of a factor by desubstitution.
    Check {
        #[arg(long)]
        word: String,
        #[arg(long)]
        left_closed: bool,
        #[arg(long)]
        right_closed: bool,
    },
    /// Letter counts.
    Stats(WordArgs),
    Factorize {
        #[arg(value_enum)]
        scheme: Scheme,
        #[command(flatten)]
        w: WordArgs,
    },
    /// Incidence matrix, primitivity and Perron-Frobenius data.
    Spectral {
        #[arg(long, value_enum, default_value = "theta")]
        subst: SubstName,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    Classify {
        #[arg(value_enum)]
        what: ClassifyWhat,
        #[arg(long)]
        n: usize,
    },
    /// Trace a word under a drawing rule.
    Trace {
        #[arg(long, default_value = "double-letter")]
        rule: String,
        #[command(flatten)]
        w: WordArgs,
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
    },
    Analyze {
        #[arg(value_enum)]
        what: AnalyzeWhat,
        #[arg(long, default_value = "double-letter")]
        rule: String,
        #[command(flatten)]
        w: WordArgs,
        /// Box sizes for the dimension estimate, comma separated.
        #[arg(long, value_delimiter = ',')]
        scales: Option<Vec<f64>>,
    },
    /// Growth chart of legal aba/baaba words.
    Growth {
        #[arg(long, default_value_t = 30)]
        max_tiles: usize,
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
    },
    /// Bisect the fire-hose angle.
    SearchAngle {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 130.0)]
        lo: f64,
        #[arg(long, default_value_t = 145.0)]
        hi: f64,
    },
    /// Write an SVG drawing.
    Render {
        #[arg(long, default_value = "double-letter")]
        rule: String,
        #[command(flatten)]
        w: WordArgs,
        #[arg(long)]
        svg: std::path::PathBuf,
        /// Draw the deviation-from-zero diagram instead of the rule's path.
        #[arg(long)]
        deviation: bool,
        /// Fill closed excursions in the deviation diagram.
        #[arg(long)]
        fill: bool,
        /// Overlay the fitted rectangle and the half-turn center.
        #[arg(long)]
        overlay: bool,
        #[arg(long, default_value_t = 10.0)]
        scale: f64,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Scheme {
    AbaBaaba,
    Digram,
    Nested,
    #[value(name = "theorem31")]
    FivePart,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum SubstName {
    Theta,
    Omega,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum ClassifyWhat {
    Parity,
    Displacement,
    CentralLetter,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum AnalyzeWhat {
    Displacement,
    Bbox,
    Intersections,
    Symmetry,
    Dimension,
    Structures,
    MaxDeviation,
    Track,
}

struct Out {
    text: String,
    json: Value,
    code: i32,
}

fn ok(text: String, json: Value) -> Result<Out> {
    Ok(Out { text, json, code: 0 })
}

fn need_n(w: &WordArgs) -> Result<usize> {
    w.n.ok_or_else(|| Error::Invalid("--n or --word is required".into()))
}

fn select_word(w: &WordArgs, rule: Option<&DrawingRule>) -> Result<Word> {
    if let Some(s) = &w.word {
        return s.parse();
    }
    let n = need_n(w)?;
    if rule.is_some_and(|r| r.name == "omega") {
        return Substitution::omega().iterate(&Word::new("F"), n);
    }
    let default = if rule.is_some_and(|r| r.name == "double-letter") { Kind::W } else { Kind::F };
    match w.kind.unwrap_or(default) {
        Kind::F => Ok(fib_word(n)),
        Kind::W => word::trim_last_two(n),
        Kind::T => word::swap_last_two(n),
        Kind::Fstar => word::strip_leading_aba(n),
    }
}

fn fmt_phi(p: PhiNum) -> String {
    if p.m == 0 && p.k % 2 == 0 {
        (p.k / 2).to_string()
    } else {
        format!("{} ({})", p, report::round_sig(p.to_f64()))
    }
}

fn fmt_displacement(p: &Path) -> String {
    match p.exact_displacement() {
        Some(d) => format!("({}, {})", fmt_phi(d[0]), fmt_phi(d[1])),
        None => {
            let d = p.displacement();
            format!("({}, {})", report::round_sig(d[0]), report::round_sig(d[1]))
        }
    }
}

fn displacement_json(p: &Path) -> Value {
    match p.exact_displacement() {
        Some(d) => json!({ "exact": [d[0].to_string(), d[1].to_string()], "value": p.displacement() }),
        None => json!({ "value": p.displacement() }),
    }
}

fn write_file(path: &std::path::Path, body: &str) -> Result<()> {
    std::fs::write(path, body).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
}

fn execute(cmd: &Command, g: &Global) -> Result<Out> {
    let pb = usize::from(g.parity_base);
    match cmd {
        Command::Gen(w) => {
            let word = select_word(w, None)?;
            ok(word.to_string(), json!({ "word": word, "length": word.len() }))
        }
        Command::Check { word, left_closed, right_closed } => {
            let w: Word = word.parse()?;
            let f = BoundedFactor::new(w, !left_closed, !right_closed);
            let r = legality(&f);
            let verdict = if r.legal { "legal" } else { "illegal" };
            let text = format!("{verdict} after {} round{}", r.rounds, if r.rounds == 1 { "" } else { "s" });
            Ok(Out { text, json: to_value(&r), code: if r.legal { 0 } else { 1 } })
        }
        Command::Stats(w) => {
            let word = select_word(w, None)?;
            let s = word::word_stats(&word)?;
            ok(format!("a={} b={} length={}", s.count_a, s.count_b, s.length), to_value(&s))
        }
        Command::Factorize { scheme, w } => factorize(*scheme, w),
        Command::Spectral { subst, power } => {
            let s = match subst {
                SubstName::Theta => Substitution::theta(),
                SubstName::Omega => Substitution::omega(),
            };
            let m = spectral::incidence(&s);
            let mp = spectral::power(&m, *power)?;
            let prim = spectral::is_primitive(&m);
            let perron = spectral::perron(&m, None).ok();
            let mut text = format!("M^{power} = {:?}\nprimitive: {}", mp.entries, prim.primitive);
            if let Some(e) = prim.exponent {
                text += &format!(" (exponent {e})");
            }
            if let Some(p) = &perron {
                text += &format!(
                    "\nlambda_pf = {}\nfrequencies = {:?}\ntile lengths = {:?}",
                    report::round_sig(p.lambda_pf),
                    p.right_vector.iter().map(|&x| report::round_sig(x)).collect::<Vec<_>>(),
                    p.left_vector.iter().map(|&x| report::round_sig(x)).collect::<Vec<_>>()
                );
            }
            ok(text, json!({ "matrix": to_value(&m), "power": to_value(&mp), "primitivity": to_value(&prim), "perron": to_value(&perron) }))
        }
        Command::Classify { what, n } => classify(*what, *n),
        Command::Trace { rule, w, svg } => {
            let r = DrawingRule::by_name(rule, pb)?;
            let word = select_word(w, Some(&r))?;
            let p = turtle::trace(&word, &r)?;
            if let Some(f) = svg {
                write_file(f, &render::render_path_svg(&p, &RenderStyle::default(), &Overlays::default())?)?;
            }
            let text = format!("tiles {} segments {} displacement {}", p.tokens.len(), p.segment_count(), fmt_displacement(&p));
            ok(text, report::path_json(&p, w.n))
        }
        Command::Analyze { what, rule, w, scales } => analyze(*what, rule, w, scales.as_deref(), g),
        Command::Growth { max_tiles, svg } => {
            if *max_tiles < 3 {
                return Err(Error::Invalid("--max-tiles must be at least 3".into()));
            }
            let gc = turtle::growth_chart(*max_tiles, g.identify_reversal);
            if let Some(f) = svg {
                write_file(f, &render::render_growth_svg(&gc, &RenderStyle::default(), 64)?)?;
            }
            let min_ext = gc.nodes.iter().map(|n| n.legal_extensions).min().unwrap_or(0);
            let text = format!(
                "nodes {} branch points {} min legal extensions {}\nstructures {}: tiles {:?}",
                gc.nodes.len(),
                gc.branch_points().len(),
                min_ext,
                gc.structures.len(),
                gc.structures.iter().map(|s| s.tiles).collect::<Vec<_>>()
            );
            let nodes: Vec<Value> = gc
                .nodes
                .iter()
                .map(|n| json!({ "word": n.word, "depth": n.depth, "children": n.children, "legal_extensions": n.legal_extensions }))
                .collect();
            ok(text, json!({ "max_tiles": gc.max_tiles, "max_word_len": gc.max_word_len, "nodes": nodes, "structures": to_value(&gc.structures), "branch_points": gc.branch_points() }))
        }
        Command::SearchAngle { n, lo, hi } => {
            let s = turtle::find_firehose_angle(&fib_word(*n), *lo, *hi)?;
            ok(format!("{:.2}", s.angle), to_value(&s))
        }
        Command::Render { rule, w, svg, deviation, fill, overlay, scale } => {
            let style = RenderStyle { scale: *scale, ..Default::default() };
            if *deviation {
                let word = select_word(w, None)?;
                let body = render::render_deviation_svg(&word, turtle::line::DEFAULT_DROP, *fill, &style)?;
                write_file(svg, &body)?;
                return ok(format!("wrote {}", svg.display()), json!({ "svg": svg.display().to_string(), "bytes": body.len() }));
            }
            let r = DrawingRule::by_name(rule, pb)?;
            let word = select_word(w, Some(&r))?;
            let p = turtle::trace(&word, &r)?;
            let mut ov = Overlays::default();
            if *overlay {
                ov.rectangle = fractal::fit_diagonal_rectangle(&p).ok();
                let s = turtle::half_turn_symmetry(&p);
                if s.symmetric {
                    ov.center = Some(s.center);
                }
            }
            let body = render::render_path_svg(&p, &style, &ov)?;
            write_file(svg, &body)?;
            ok(format!("wrote {}", svg.display()), json!({ "svg": svg.display().to_string(), "bytes": body.len() }))
        }
    }
}

fn factorize(scheme: Scheme, w: &WordArgs) -> Result<Out> {
    match scheme {
        Scheme::AbaBaaba => {
            let word = select_word(w, None)?;
            let f = wordstruct::factorize_aba_baaba(&word)?;
            let mut text: String = f.factors.iter().map(|x| format!("({x})")).collect();
            if !f.remainder.is_empty() {
                text += &format!(" + {}", f.remainder);
            }
            ok(text, to_value(&f))
        }
        Scheme::Digram => {
            let word = select_word(w, None)?;
            let d = wordstruct::digram_pairs(&word)?;
            let text = d.iter().map(|x| format!("({})", x.as_str())).collect();
            ok(text, json!({ "pairs": d.iter().map(|x| x.as_str()).collect::<Vec<_>>() }))
        }
        Scheme::Nested => {
            let n = need_n(w)?;
            if n % 3 != 0 || n == 0 {
                return Err(Error::Invalid("nested embedding needs n = 3m, m ≥ 1".into()));
            }
            let c = wordstruct::nested_embedding(n / 3);
            let text = c.iter().map(|k| format!("F_{k}")).collect::<Vec<_>>().join(" ");
            ok(text, json!({ "components": c, "matches": wordstruct::nested_embedding_word(n / 3) == fib_word(n) }))
        }
        Scheme::FivePart => {
            let n = need_n(w)?;
            let t = wordstruct::decompose_theorem31(n)?;
            let mut text = String::new();
            for i in 0..5 {
                text += &format!("W_{}", t.part_indices[i]);
                if i < 4 {
                    text += &format!("({})", t.joints[i]);
                }
            }
            let ok_ = t.concat() == Some(word::trim_last_two(n)?);
            text += &format!("\nidentity holds: {ok_}");
            ok(text, json!({ "decomposition": to_value(&t), "identity_holds": ok_ }))
        }
    }
}

fn classify(what: ClassifyWhat, n: usize) -> Result<Out> {
    if n == 0 {
        return Err(Error::Invalid("--n must be at least 1".into()));
    }
    match what {
        ClassifyWhat::Parity => {
            let p = wordstruct::direction_parity(n);
            ok(p.letter().to_string(), to_value(&p))
        }
        ClassifyWhat::Displacement => {
            let c = wordstruct::displacement_class(n)?;
            let mag = match c.magnitude {
                1 => "+phi",
                -1 => "-phi",
                _ => "0",
            };
            ok(format!("({mag}, {})", c.parity.letter()), to_value(&c))
        }
        ClassifyWhat::CentralLetter => {
            let c = wordstruct::central_letter(n)?;
            ok(format!("{c:?}").to_lowercase(), to_value(&c))
        }
    }
}

fn analyze(what: AnalyzeWhat, rule: &str, w: &WordArgs, scales: Option<&[f64]>, g: &Global) -> Result<Out> {
    let pb = usize::from(g.parity_base);
    match what {
        AnalyzeWhat::MaxDeviation => {
            let n = need_n(w)?;
            let m = turtle::max_deviation(n);
            ok(fmt_phi(m), phi_value(m))
        }
        AnalyzeWhat::Track => {
            let n = need_n(w)?;
            if n % 3 != 0 || n == 0 {
                return Err(Error::Invalid("track needs n = 3m, m ≥ 1".into()));
            }
            let rows = wordstruct::track_components(n / 3);
            let text = rows
                .iter()
                .map(|r| {
                    format!(
                        "F_{}\t{:+}\t{}\t{:+}\t{}",
                        r.component,
                        r.initial_direction,
                        fmt_phi(r.relative_displacement),
                        r.final_direction,
                        fmt_phi(r.running_displacement)
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            ok(text, to_value(&rows))
        }
        AnalyzeWhat::Structures => {
            let word = select_word(&WordArgs { kind: w.kind.or(Some(Kind::F)), ..w.clone() }, None)?;
            let r = turtle::zero_excursions(&word, g.identify_reversal)?;
            let text = format!(
                "excursions {} structures {}: tiles {:?}",
                r.excursions.len(),
                r.structures.len(),
                r.structures.iter().map(|s| s.tiles).collect::<Vec<_>>()
            );
            ok(text, json!({ "structures": to_value(&r.structures), "excursions": r.excursions.len(), "open_final": r.excursions.last().is_some_and(|e| !e.closed) }))
        }
        _ => {
            let r = DrawingRule::by_name(rule, pb)?;
            let word = select_word(w, Some(&r))?;
            let p = turtle::trace(&word, &r)?;
            match what {
                AnalyzeWhat::Displacement => {
                    ok(fmt_displacement(&p), json!({ "displacement": displacement_json(&p), "tiles": p.tokens.len() }))
                }
                AnalyzeWhat::Bbox => {
                    let bb = p.bounding_box();
                    let fit = fractal::fit_diagonal_rectangle(&p).ok();
                    let mut text = format!("width {} height {}", report::round_sig(bb.width()), report::round_sig(bb.height()));
                    if let Some(f) = &fit {
                        text += &format!("\nfitted rectangle ratio {} at {} degrees", report::round_sig(f.ratio), report::round_sig(f.angle));
                    }
                    ok(text, json!({ "bbox": to_value(&bb), "fitted": to_value(&fit) }))
                }
                AnalyzeWhat::Intersections => {
                    let i = turtle::self_intersections(&p);
                    let text = format!(
                        "proper_crossings {} collinear_overlaps {} vertex_touches {}",
                        i.proper_crossings, i.collinear_overlaps, i.vertex_touches
                    );
                    ok(text, to_value(&i))
                }
                AnalyzeWhat::Symmetry => {
                    let s = turtle::half_turn_symmetry(&p);
                    ok(format!("{} center ({}, {})", s.symmetric, s.center[0], s.center[1]), to_value(&s))
                }
                AnalyzeWhat::Dimension => {
                    let sc = scales.unwrap_or(&DEFAULT_SCALES);
                    let b = fractal::box_count_dimension(&p, sc)?;
                    let text = format!(
                        "box-count {} (residual {}) limit {}",
                        report::round_sig(b.estimate),
                        report::round_sig(b.residual),
                        report::round_sig(fractal::limit_dimension())
                    );
                    ok(text, json!({ "box_count": to_value(&b), "limit": fractal::limit_dimension() }))
                }
                _ => unreachable!(),
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen(_) => "gen",
        Command::Check { .. } => "check",
        Command::Stats(_) => "stats",
        Command::Factorize { .. } => "factorize",
        Command::Spectral { .. } => "spectral",
        Command::Classify { .. } => "classify",
        Command::Trace { .. } => "trace",
        Command::Analyze { .. } => "analyze",
        Command::Growth { .. } => "growth",
        Command::SearchAngle { .. } => "search-angle",
        Command::Render { .. } => "render",
    }
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let res = execute(&cli.command, &cli.global);
    let o = match res {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let body = if cli.global.json {
        let inputs: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
        let conv = Conventions::new(usize::from(cli.global.parity_base), cli.global.identify_reversal);
        report::to_string(&envelope(command_name(&cli.command), json!(inputs), o.json, &conv))
    } else {
        let conv = Conventions::new(usize::from(cli.global.parity_base), cli.global.identify_reversal);
        format!(
            "{}\n# heading {} ({}), parity base {}, excursions {}\n",
            o.text, conv.heading, conv.plane, conv.parity_base, conv.excursion_identity
        )
    };
    match &cli.global.out {
        Some(f) => {
            if let Err(e) = write_file(f, &body) {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
        }
        None => {
            let _ = out.write_all(body.as_bytes());
        }
    }
    o.code
}
