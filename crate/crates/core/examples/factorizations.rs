//! The aba/baaba parse, the nested embedding and the five-part split of W_n.

use fibword::word::{fib_word, trim_last_two};
use fibword::wordstruct::{
    central_letter, check_lemma_32_33, decompose_theorem31, digram_frequencies, factorize_aba_baaba,
    nested_embedding, nested_embedding_word,
};

fn main() -> fibword::Result<()> {
    let f = factorize_aba_baaba(&fib_word(8))?;
    let shown: String = f.factors.iter().map(|x| format!("({x})")).collect();
    println!("F_8 = {shown} + {}", f.remainder);

    for m in 1..=4 {
        println!("F_{} = {:?} {}", 3 * m, nested_embedding(m), nested_embedding_word(m) == fib_word(3 * m));
    }

    for n in [6, 9, 12] {
        let t = decompose_theorem31(n)?;
        let parts: Vec<String> = t.parts.iter().map(|p| p.render()).collect();
        println!("W_{n}: parts {:?} joints {:?} ok {}", parts, t.joints, t.concat() == Some(trim_last_two(n)?));
    }
    println!("T identities at n=10: {:?}", check_lemma_32_33(10)?);

    for n in 1..=9 {
        print!("{:?} ", central_letter(n)?);
    }
    println!();
    let d = digram_frequencies(25)?;
    println!("digrams in F_25: ab {:.3} aa {:.3} ba {:.3}", d.freq_ab, d.freq_aa, d.freq_ba);
    Ok(())
}
