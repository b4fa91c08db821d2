//! Incidence matrices and Perron-Frobenius data.

use fibword::spectral::{incidence, is_primitive, perron, power, IncidenceMatrix};
use fibword::word::Substitution;

fn main() -> fibword::Result<()> {
    let m = incidence(&Substitution::theta());
    for n in [1, 2, 6] {
        println!("M^{n} = {:?}", power(&m, n)?.entries);
    }
    let p = perron(&m, None)?;
    println!("lambda = {:.12}", p.lambda_pf);
    println!("letter frequencies {:?}", p.right_vector);
    println!("tile lengths (b = 1) {:?}", p.left_vector);

    let omega = incidence(&Substitution::omega());
    println!("omega primitive: {:?}", is_primitive(&omega));
    println!("omega perron: {:?}", perron(&omega, None).err());

    let trib = IncidenceMatrix::new(b"abc".to_vec(), vec![vec![1, 1, 1], vec![1, 0, 0], vec![0, 1, 0]])?;
    let t = perron(&trib, Some(b'c'))?;
    println!("tribonacci lambda {:.9} by {} in {} iterations", t.lambda_pf, t.method, t.iterations);
    Ok(())
}
