//! Build F_4 and F_16 = F_4[β]/(β²+β+α) and locate a primitive 15th root of unity.

use resicode::{Field, Poly};

fn main() -> resicode::Result<()> {
    let f2 = Field::prime(2)?;
    let f4 = Field::extension(&f2, 2, Some(&Poly::from_indices(&f2, &[1, 1, 1])?))?;
    let a = f4.primitive_element();
    let modulus = Poly::from_elements(&f4, vec![a.clone(), f4.one(), f4.one()])?;
    let f16 = Field::extension(&f4, 2, Some(&modulus))?;
    println!("{f4}\n{f16}");

    let theta = f16.nth_primitive_root(15)?;
    println!("theta = {theta}, order {:?}", theta.multiplicative_order());
    for k in [0, 5, 10] {
        let x = theta.pow(k)?;
        println!("theta^{k} = {x}, in F_4: {}", x.in_subfield(4));
    }
    let embedded = f16.embed(&a)?;
    println!("alpha in F_16 = {embedded}, back down = {}", embedded.to_base()?);
    Ok(())
}
