//! Scalars: arbitrary-precision integers and reduced rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;

pub type Int = BigInt;
pub type Rational = BigRational;
pub type IntMatrix = Matrix<Int>;
pub type QMatrix = Matrix<Rational>;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: &Int) -> Rational {
    Rational::from_integer(n.clone())
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(Int::from(x)))
        .collect()
}

pub fn to_rational_vec(v: &[Int]) -> Vec<Rational> {
    v.iter().map(rat_int).collect()
}

pub fn to_qmatrix(m: &IntMatrix) -> QMatrix {
    m.map(rat_int)
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(cols, rows.iter().map(|r| int_vec(r)).collect())
}

pub fn q_matrix(rows: &[&[i64]]) -> QMatrix {
    to_qmatrix(&int_matrix(rows))
}

/// Converts a rational matrix with integral entries; `None` if any entry is fractional.
pub fn to_int_matrix(m: &QMatrix) -> Option<IntMatrix> {
    let rows = m
        .rows_vec()
        .into_iter()
        .map(|r| to_int_vec(&r))
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_rows(m.ncols(), rows))
}

pub fn to_int_vec(v: &[Rational]) -> Option<Vec<Int>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Least common multiple of the denominators (1 for an empty slice).
pub fn denominator_lcm<'a>(v: impl IntoIterator<Item = &'a Rational>) -> Int {
    v.into_iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()))
}

/// Integer multiple of `v` with coprime entries and the same direction.
/// Returns the zero vector unchanged.
pub fn primitive_integer(v: &[Rational]) -> Vec<Int> {
    let l = denominator_lcm(v);
    let scaled: Vec<Int> = v.iter().map(|x| (x * rat_int(&l)).to_integer()).collect();
    let g = scaled.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|x| x / &g).collect()
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |acc, x| acc.gcd(x))
}

/// Representative of `x mod 1` in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], k: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * k).collect()
}

pub fn vec_neg(a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| -x).collect()
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

/// Formats as `"n"` for integers and `"p/q"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"n"`, `"-n"`, `"p/q"`. Surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<Int>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
    }
}

/// Lexicographic comparison of rational vectors.
pub fn lex_cmp(a: &[Rational], b: &[Rational]) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}

pub fn abs_int(x: &Int) -> Int {
    x.abs()
}

/// Floor division for integers, rounding toward negative infinity.
pub fn floor_div(a: &Int, b: &Int) -> Int {
    a.div_floor(b)
}
