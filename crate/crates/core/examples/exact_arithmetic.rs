//! Factored rational functions: cancellation, Taylor expansion and exact division.

use gz_engine::arith::{frac, int, ints, AffineLinearForm, Frf, Polynomial, VariableLayout};

fn main() -> gz_engine::Result<()> {
    let l = VariableLayout::flat(2);
    let x = Polynomial::var(&l, 0);
    let y = Polynomial::var(&l, 1);
    let d = &x - &y;
    let (_, form) = AffineLinearForm::normalized(vec![int(1), int(-1)], int(0)).unwrap();

    // (x² − y²)/(x − y) cancels to x + y
    let f = Frf::from(&(&x * &x) - &(&y * &y)).div_form(&form);
    println!("(x^2 - y^2)/(x - y) = {f}");
    assert_eq!(f, Frf::from(&x + &y));

    let g = Frf::from(x.clone()).div_form(&form);
    println!("g = {g}");
    println!("g(3, 1/2) = {}", g.eval(&[int(3), frac(1, 2)])?);
    println!("g has a pole at (1,1): {}", !g.is_holomorphic_at(&ints(&[1, 1])));
    println!("taylor of g at (2,0) to degree 2: {}", g.taylor(&ints(&[2, 0]), 2)?);

    let q = (&(&x * &d) + &d).exact_divide(&form)?;
    println!("(x(x-y) + (x-y)) / (x-y) = {q}");
    Ok(())
}
