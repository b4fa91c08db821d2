//! Acceptance criteria 1-17. One PASS/FAIL line per criterion.
//!
//! Parts listed in `KNOWN` are asserted as stated and allowed to fail;
//! any other failure makes the process exit nonzero.

use std::process::ExitCode;

use fibword::fractal::{self, DEFAULT_SCALES};
use fibword::legality::{desubstitute, is_legal_factor, legality, oracle_is_factor, BoundedFactor};
use fibword::phi::{PhiNum, PHI};
use fibword::spectral::{incidence, perron, power};
use fibword::turtle::{self, DrawingRule};
use fibword::word::{
    contains_power, factor_set, fib, fib_word, fib_word_concat, max_power, repetitions, trim_last_two,
    word_stats, Substitution, Word,
};
use fibword::wordstruct::{self, central_letter, central_letter_of};

/// (criterion, part) pairs that cannot hold; see the README.
const KNOWN: &[(u32, &str, &str)] = &[
    (4, "three-round-word", "the embedded word is a factor of F_25, so it is legal"),
    (14, "omega-crossing", "unit lattice paths with no FF can only touch at vertices"),
];

struct Part {
    name: &'static str,
    ok: bool,
    detail: String,
}

fn part(name: &'static str, ok: bool, detail: impl Into<String>) -> Part {
    Part { name, ok, detail: detail.into() }
}

fn c1() -> Vec<Part> {
    let table = [
        "a",
        "ab",
        "aba",
        "abaab",
        "abaababa",
        "abaababaabaab",
        "abaababaabaababaababa",
        "abaababaabaababaababaabaababaabaab",
    ];
    let strings = table.iter().enumerate().all(|(n, s)| fib_word(n).as_str() == *s);
    let counts = (0..=25).all(|n| {
        let s = word_stats(&fib_word(n)).unwrap();
        (s.count_a as u64, s.count_b as u64, s.length as u64) == (fib(n + 1), fib(n), fib(n + 2))
    });
    vec![part("strings", strings, "n = 0..7"), part("counts", counts, "n = 0..25")]
}

fn c2() -> Vec<Part> {
    let bad: Vec<usize> = (0..=20).filter(|&n| fib_word(n) != fib_word_concat(n)).collect();
    vec![part("agree", bad.is_empty(), format!("n ≤ 20, mismatches {bad:?}"))]
}

fn c3() -> Vec<Part> {
    let f25 = fib_word(25);
    let clean = !f25.contains(&"bb".into()) && !f25.contains(&"aaa".into());
    let sizes: Vec<usize> = (1..=12).map(|l| factor_set(16, l).unwrap().len()).collect();
    let complexity = sizes.iter().enumerate().all(|(i, &s)| s == i + 2);
    vec![
        part("forbidden", clean, format!("|F_25| = {}", f25.len())),
        part("complexity", complexity, format!("{sizes:?}")),
    ]
}

fn all_words(len: usize) -> impl Iterator<Item = Word> {
    (0u32..1 << len).map(move |bits| {
        Word::from_letters((0..len).map(|i| if bits >> i & 1 == 1 { b'b' } else { b'a' }).collect())
    })
}

fn c4() -> Vec<Part> {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for len in 0..=14 {
        for w in all_words(len) {
            checked += 1;
            if is_legal_factor(&BoundedFactor::open(w.clone())) != oracle_is_factor(&w).unwrap() {
                mismatches.push(w);
            }
        }
    }
    let worked = desubstitute(&BoundedFactor::open("abaabaababaabababa"));
    let r10 = legality(&BoundedFactor::open("aababaabaabaaba"));
    let r11 = legality(&BoundedFactor::open("aababaababaabaaba"));
    vec![
        part(
            "oracle",
            mismatches.is_empty(),
            format!("{checked} words, {} mismatches", mismatches.len()),
        ),
        part(
            "worked-example",
            worked.candidates().contains(&"ababaabaaab".into()),
            format!("{:?}", worked.candidates()),
        ),
        part("two-round-word", !r10.legal && r10.rounds == 2, format!("legal={} rounds={}", r10.legal, r10.rounds)),
        part("three-round-word", !r11.legal && r11.rounds == 3, format!("legal={} rounds={}", r11.legal, r11.rounds)),
    ]
}

fn c5() -> Vec<Part> {
    let m = incidence(&Substitution::theta());
    let m6 = power(&m, 6).unwrap();
    let p = perron(&m, None).unwrap();
    let close = |a: f64, b: f64| (a - b).abs() < 1e-9;
    vec![
        part("power", m6.entries == vec![vec![13, 8], vec![8, 5]], format!("{:?}", m6.entries)),
        part("lambda", close(p.lambda_pf, 1.618_033_988_750), format!("{}", p.lambda_pf)),
        part(
            "frequencies",
            close(p.right_vector[0], PHI - 1.0) && close(p.right_vector[1], 2.0 - PHI),
            format!("{:?}", p.right_vector),
        ),
        part(
            "tile-lengths",
            close(p.left_vector[0], PHI) && close(p.left_vector[1], 1.0),
            format!("{:?}", p.left_vector),
        ),
    ]
}

fn c6() -> Vec<Part> {
    let big = fib_word(20);
    let f = wordstruct::factorize_aba_baaba(&big).unwrap();
    let head: Vec<&str> = f.factors.iter().take(7).map(|w| w.as_str()).collect();
    let want = ["aba", "aba", "baaba", "aba", "baaba", "baaba", "aba"];
    let round_trip = (1..=big.len()).all(|l| {
        let w = big.slice(0, l);
        wordstruct::factorize_aba_baaba(&w).is_ok_and(|f| f.concat() == w)
    });
    let nested = (1..=6).all(|m| wordstruct::nested_embedding_word(m) == fib_word(3 * m));
    let t31: Vec<usize> = (6..=18)
        .filter(|&n| wordstruct::decompose_theorem31(n).unwrap().concat() != Some(trim_last_two(n).unwrap()))
        .collect();
    let l323 = (3..=20).all(|n| wordstruct::check_lemma_32_33(n).unwrap() == [true; 3]);
    vec![
        part("parse-head", head == want, head.join(" ")),
        part("round-trip", round_trip, format!("every prefix to {}", big.len())),
        part("nested", nested, "m ≤ 6"),
        part("w-split", t31.is_empty(), format!("6 ≤ n ≤ 18, failures {t31:?}")),
        part("t-identities", l323, "3 ≤ n ≤ 20"),
    ]
}

fn c7() -> Vec<Part> {
    let pal = (1..=20).all(|n| trim_last_two(n).unwrap().is_palindrome());
    let central = (1..=20).all(|n| central_letter_of(&trim_last_two(n).unwrap()) == central_letter(n).ok());
    let p2 = wordstruct::pisano_period(2);
    vec![
        part("palindromes", pal, "1 ≤ n ≤ 20"),
        part("central-letter", central, "1 ≤ n ≤ 20"),
        part("pisano", p2 == 3, format!("pisano_period(2) = {p2}")),
    ]
}

fn c8() -> Vec<Part> {
    let mut checked = 0;
    let classes = (1..=24).filter(|n| [0, 1, 3, 4].contains(&(n % 6))).all(|n| {
        checked += 1;
        let c = wordstruct::displacement_class(n).unwrap();
        let t = turtle::trace_1d(&fib_word(n)).unwrap();
        c.source == "closed-form"
            && t.final_position() == c.position()
            && wordstruct::Parity::of_direction(t.final_direction) == c.parity
    });
    let running: Vec<i64> = wordstruct::track_components(5)
        .iter()
        .map(|r| {
            assert_eq!(r.running_displacement.k, 0);
            r.running_displacement.m
        })
        .collect();
    let table = running == [1, 2, 3, 4, 3, 2, 1, 0, -1];
    let dev: Vec<String> = (1..=4).map(|d| turtle::max_deviation(3 * (d + 1)).to_string()).collect();
    let growth = (1..=4).all(|d| turtle::max_deviation(3 * (d + 1)) > PhiNum::PHI * d as i64);
    vec![
        part("closed-forms", classes, format!("{checked} values of n")),
        part("f15-running", table, format!("running/φ {running:?}")),
        part("deviation-growth", growth, dev.join(", ")),
    ]
}

fn c9() -> Vec<Part> {
    let f11 = fib_word(11);
    let flip = turtle::zero_excursions(&f11, false).unwrap();
    let both = turtle::zero_excursions(&f11, true).unwrap();
    let tiles = |r: &turtle::ExcursionReport| r.structures.iter().map(|s| s.tiles).collect::<Vec<_>>();
    let g = turtle::growth_chart(30, false);
    let keys = |s: &[turtle::Structure]| s.iter().map(|s| s.key.clone()).collect::<std::collections::BTreeSet<_>>();
    let min_ext = g.nodes.iter().map(|n| n.legal_extensions).min().unwrap_or(0);
    vec![
        part(
            "f11",
            flip.structures.len() == 5,
            format!(
                "sign-flip {} {:?}, sign-flip+reversal {} {:?}",
                flip.structures.len(),
                tiles(&flip),
                both.structures.len(),
                tiles(&both)
            ),
        ),
        part("growth-same", keys(&g.structures) == keys(&flip.structures), format!("{} structures", g.structures.len())),
        part("growth-extends", min_ext >= 1, format!("{} nodes, min legal extensions {min_ext}", g.nodes.len())),
        part("branching", !g.branch_points().is_empty(), format!("{} branch points", g.branch_points().len())),
    ]
}

fn c10() -> Vec<Part> {
    let rows: [(usize, [i64; 2], usize); 6] = [
        (4, [-2, -1], 3),
        (7, [0, -6], 16),
        (10, [-12, -11], 71),
        (13, [0, -40], 304),
        (16, [-70, -69], 1291),
        (19, [0, -238], 5472),
    ];
    let dl = DrawingRule::double_letter();
    let mut traced = Vec::new();
    let table = rows.iter().all(|&(n, d, t)| {
        let p = turtle::trace(&trim_last_two(n).unwrap(), &dl).unwrap();
        traced.push(p.integer_displacement());
        p.integer_displacement() == Some(d) && p.tokens.len() == t
    });
    let seq = fractal::vector_sequence(49).unwrap();
    let recurrence = rows.iter().all(|&(n, d, _)| seq.iter().any(|&(k, v)| k == n && v == d));
    let alternation = seq.iter().all(|&(n, [x, y])| match n % 6 {
        1 => x == 0,
        4 => y == x + 1,
        _ => false,
    });
    vec![
        part("traced", table, format!("{traced:?}")),
        part("recurrence", recurrence, format!("{} terms", seq.len())),
        part("alternation", alternation, format!("to n = {}", seq.last().unwrap().0)),
    ]
}

fn c11() -> Vec<Part> {
    let dl = DrawingRule::double_letter();
    let mut detail = Vec::new();
    let ok = [4, 7, 10, 13, 16].iter().all(|&n| {
        let p = turtle::trace(&trim_last_two(n).unwrap(), &dl).unwrap();
        let s = turtle::half_turn_symmetry(&p);
        detail.push(format!("n={n} {}", s.symmetric));
        s.symmetric && p.initial_heading == p.final_heading
    });
    vec![part("half-turn", ok, detail.join(", "))]
}

fn c12() -> Vec<Part> {
    let sim = fractal::similarity_dimension(PHI.powi(3), 1.0 + 2f64.sqrt()).unwrap().dimension;
    let koch = fractal::similarity_dimension_ratio(8.0, 0.25).unwrap().dimension;
    let p19 = turtle::trace(&trim_last_two(19).unwrap(), &DrawingRule::double_letter()).unwrap();
    let bc = fractal::box_count_dimension(&p19, &DEFAULT_SCALES).unwrap();
    let fit = fractal::bbox_ratio_limit(19).unwrap();
    let sr = fractal::scale_ratio(49).unwrap();
    vec![
        part("similarity", (sim - 1.6379).abs() < 5e-5, format!("{sim}")),
        part("koch-similarity", koch == 1.5, format!("{koch}")),
        part(
            "box-count",
            (1.45..=1.75).contains(&bc.estimate),
            format!("{} on scales {:?}", bc.estimate, bc.scales),
        ),
        part("bbox", (fit.ratio - 2.4142).abs() < 0.1, format!("{} at {}°", fit.ratio, fit.angle)),
        part("scale-ratio", (sr - (1.0 + 2f64.sqrt())).abs() < 1e-3, format!("n=49 {sr}")),
    ]
}

fn c13() -> Vec<Part> {
    let d7 = fractal::similarity_dimension(17.0, 7.0).unwrap().dimension;
    let d31 = fractal::similarity_dimension(1_762_289.0, 8119.0).unwrap().dimension;
    let p7 = fractal::periodic_approx(7).unwrap();
    let p31 = fractal::periodic_approx(31).unwrap();
    vec![
        part("(17, 7)", (d7 - 1.456).abs() < 1e-3, format!("{d7}")),
        part("(1762289, 8119)", (d31 - 1.598).abs() < 1e-3, format!("{d31}")),
        part(
            "from-recurrence",
            (p7.segments, p7.scale) == (17, 7.0) && (p31.segments, p31.scale) == (1_762_289, 8119.0),
            format!("k=7 ({}, {}), k=31 ({}, {})", p7.segments, p7.scale, p31.segments, p31.scale),
        ),
    ]
}

fn c14() -> Vec<Part> {
    let omega = DrawingRule::omega();
    let pre = turtle::self_intersections(&turtle::trace(&"FLFRFRFLFRFRFLFRFRFLFR".into(), &omega).unwrap());
    let next = turtle::self_intersections(&turtle::trace(&"FLFRFRFLFRFRFLFRFRFLFRF".into(), &omega).unwrap());
    let dl = DrawingRule::double_letter();
    let mut detail = Vec::new();
    let clean = [4, 7, 10, 13, 16].iter().all(|&n| {
        [trim_last_two(n).unwrap(), fib_word(n)].iter().all(|w| {
            let r = turtle::self_intersections(&turtle::trace(w, &dl).unwrap());
            if r.proper_crossings + r.collinear_overlaps > 0 {
                detail.push(format!("n={n} |w|={} {r:?}", w.len()));
            }
            r.proper_crossings == 0 && r.collinear_overlaps == 0
        })
    });
    vec![
        part(
            "omega-crossing",
            pre.proper_crossings >= 1,
            format!(
                "crossings {} overlaps {} touches {}; one more F: touches {}",
                pre.proper_crossings, pre.collinear_overlaps, pre.vertex_touches, next.vertex_touches
            ),
        ),
        part("double-letter", clean, if detail.is_empty() { "W_n and F_n, n ≤ 16".into() } else { detail.join("; ") }),
    ]
}

fn c15() -> Vec<Part> {
    let f12 = fib_word(12);
    let squares = repetitions(&f12, 20, 2);
    let sq = squares.contains(&"baababaa".into()) && contains_power(&f12, &"baababaa".into(), 2);
    let cube = contains_power(&f12, &"baaba".into(), 3);
    let top = max_power(&fib_word(14), 60);
    let no_fourth = top.as_ref().is_some_and(|r| r.exponent < 4);
    vec![
        part("square", sq, format!("{} distinct square blocks", squares.len())),
        part("cube", cube, "baaba"),
        part("no-fourth-power", no_fourth, format!("max {:?}", top.map(|r| (r.block.to_string(), r.exponent)))),
    ]
}

fn c16() -> Vec<Part> {
    match turtle::find_firehose_angle(&fib_word(12), 130.0, 145.0) {
        Ok(s) => vec![part(
            "bisection",
            (s.angle - 137.4).abs() <= 0.5,
            format!("{:.3}° after {} steps", s.angle, s.iterations),
        )],
        Err(e) => vec![part("bisection", false, e.to_string())],
    }
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = fibword::cli::run(std::iter::once("fibword").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

fn c17() -> Vec<Part> {
    let dir = std::env::temp_dir().join(format!("fibword-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = |i: usize| dir.join(format!("r{i}.svg")).display().to_string();
    let invocations: Vec<Vec<String>> = vec![
        vec!["trace".into(), "--n".into(), "10".into(), "--json".into()],
        vec!["analyze".into(), "dimension".into(), "--n".into(), "13".into(), "--json".into()],
        vec!["growth".into(), "--max-tiles".into(), "20".into(), "--json".into()],
        vec!["check".into(), "--word".into(), "aababaabaabaaba".into(), "--json".into()],
    ];
    let mut same = true;
    for args in &invocations {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        same &= run_cli(&a) == run_cli(&a);
    }
    let mut svgs = true;
    for i in 0..2 {
        for trial in 0..2 {
            let path = svg(2 * i + trial);
            let mut a = vec!["render", "--n", "13", "--svg", &path];
            if i == 1 {
                a.push("--deviation");
            }
            run_cli(&a);
        }
        svgs &= std::fs::read(svg(2 * i)).ok() == std::fs::read(svg(2 * i + 1)).ok();
    }
    let _ = std::fs::remove_dir_all(&dir);
    vec![part("json", same, format!("{} invocations", invocations.len())), part("svg", svgs, "path and deviation")]
}

fn main() -> ExitCode {
    let criteria: [fn() -> Vec<Part>; 17] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15, c16, c17];
    let mut unexpected = 0;
    for (i, c) in criteria.iter().enumerate() {
        let id = i as u32 + 1;
        let parts = c();
        let failed: Vec<&Part> = parts.iter().filter(|p| !p.ok).collect();
        let known: Vec<&(u32, &str, &str)> =
            KNOWN.iter().filter(|k| k.0 == id && failed.iter().any(|p| p.name == k.1)).collect();
        let status = if failed.is_empty() {
            "PASS".to_string()
        } else if known.len() == failed.len() {
            format!("FAIL (known: {})", known.iter().map(|k| k.2).collect::<Vec<_>>().join("; "))
        } else {
            unexpected += 1;
            "FAIL".to_string()
        };
        let details: Vec<String> =
            parts.iter().map(|p| format!("{}{}: {}", if p.ok { "" } else { "!" }, p.name, p.detail)).collect();
        println!("criterion {id}: {status} [{}]", details.join(" | "));
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
