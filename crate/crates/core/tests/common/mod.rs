use num_bigint::BigInt;
use num_integer::Integer;
use seifert_tight::Mat2;

/// Determinant-one matrix with first column `(a, c)` and entries in
/// `[-bound, bound]`, choosing among completions by `pick`. `None` when
/// `(a, c)` is not primitive or no completion fits the bound.
#[allow(dead_code)]
pub fn det_one(a: i64, c: i64, pick: u64, bound: i64) -> Option<Mat2> {
    if a.gcd(&c) != 1 {
        return None;
    }
    // a*d - b*c = 1
    let e = BigInt::from(a).extended_gcd(&BigInt::from(c));
    let g: i64 = (&e.gcd).try_into().ok()?;
    let (x, y): (i64, i64) = ((&e.x).try_into().ok()?, (&e.y).try_into().ok()?);
    // a*x + c*y = g = ±1  =>  d = x*g, b = -y*g
    let (d0, b0) = (x * g, -y * g);
    let fits = |j: i64| {
        let (b, d) = (b0 + j * a, d0 + j * c);
        (b.abs() <= bound && d.abs() <= bound).then_some((b, d))
    };
    let choices: Vec<(i64, i64)> = (-4 * bound..=4 * bound).filter_map(fits).collect();
    if choices.is_empty() {
        return None;
    }
    let (b, d) = choices[(pick as usize) % choices.len()];
    Mat2::new(a, b, c, d).ok()
}
