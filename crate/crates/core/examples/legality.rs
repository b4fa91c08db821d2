//! Desubstitution as a legality test for embedded words.

use fibword::legality::{desubstitute, legality, oracle_is_factor, BoundedFactor};

fn main() -> fibword::Result<()> {
    let worked = BoundedFactor::open("abaabaababaabababa");
    println!("preimages of {}: {:?}", worked.word, desubstitute(&worked).candidates());

    for w in ["aababaabaabaaba", "aababaababaababa", "aababaababaabaaba", "abaababaabaab"] {
        let r = legality(&BoundedFactor::open(w));
        println!(
            "{w:<20} {} after {} round(s), oracle says {}",
            if r.legal { "legal" } else { "illegal" },
            r.rounds,
            oracle_is_factor(&w.into())?
        );
        for (i, level) in r.levels.iter().enumerate() {
            let shown: Vec<String> = level.iter().map(|x| x.to_string()).collect();
            println!("    round {}: {}", i + 1, shown.join(" "));
        }
    }

    // closing the left end forbids an unpaired leading b
    let open = legality(&BoundedFactor::open("baab")).legal;
    let closed = legality(&BoundedFactor::new("baab".into(), false, true)).legal;
    println!("baab open {open}, left-closed {closed}");
    Ok(())
}
