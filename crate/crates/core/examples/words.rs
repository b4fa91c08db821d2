//! Fibonacci words, their counts, and the two constructions.

use fibword::word::{self, fib_word, fib_word_concat, Substitution, Word};

fn main() -> fibword::Result<()> {
    let theta = Substitution::theta();
    let mut w = Word::new("a");
    for n in 0..=7 {
        let s = word::word_stats(&w)?;
        println!("F_{n:<2} {:<34} |a|={:<2} |b|={:<2} len={}", w, s.count_a, s.count_b, s.length);
        assert_eq!(w, fib_word_concat(n));
        w = theta.apply(&w)?;
    }

    // W_n is a palindrome, T_n swaps the last two letters
    for n in [5, 6, 7] {
        println!("W_{n} = {}  palindrome: {}", word::trim_last_two(n)?, word::trim_last_two(n)?.is_palindrome());
        println!("T_{n} = {}", word::swap_last_two(n)?);
    }

    for l in 1..=8 {
        println!("factors of length {l}: {}", word::factor_set(14, l)?.len());
    }

    let f12 = fib_word(12);
    let top = word::max_power(&f12, 40).expect("F_12 has repetitions");
    println!("highest power in F_12: ({})^{} at {}", top.block, top.exponent, top.position);
    println!("baaba cubed: {}", word::contains_power(&f12, &"baaba".into(), 3));
    Ok(())
}
