//! Univariate and bivariate polynomials over a generic scalar.
//!
//! Graph polynomials live over [`Rational`](crate::Rational) (univariate) and
//! [`Integer`](crate::Integer) (Tutte); the same code runs over `f64` or
//! `Ratio<i64>` when that is convenient.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, Zero};
use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}

/// Scalars whose division is exact, as interpolation requires.
pub trait Field: Scalar {}

impl Field for f32 {}
impl Field for f64 {}
impl Field for Ratio<i64> {}
impl Field for Ratio<i128> {}
impl Field for Ratio<BigInt> {}

fn from_i64<T: Scalar>(k: i64) -> T {
    T::from_i64(k).expect("scalar type represents small integers")
}

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `k`.
    pub fn variable() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `k - root`.
    pub fn linear_factor(root: i64) -> Self {
        Self::new(vec![from_i64(-root), T::one()])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Integer coefficients, ascending.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| from_i64(c)).collect())
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> T {
        self.coeffs.get(d).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_i64(&self, k: i64) -> T {
        self.eval(&from_i64(k))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `q(k) = p(-k)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| if d % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Field> Polynomial<T> {
    /// The unique polynomial of degree below `points.len()` through the
    /// given samples (Newton divided differences).
    pub fn interpolate(points: &[(i64, T)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::NoSamplePoints);
        }
        let mut seen = HashSet::new();
        for &(x, _) in points {
            if !seen.insert(x) {
                return Err(Error::DuplicateAbscissa(x));
            }
        }
        let xs: Vec<T> = points.iter().map(|&(x, _)| from_i64(x)).collect();
        let mut table: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
        let n = points.len();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = table[i].clone() - table[i - 1].clone();
                let den = xs[i].clone() - xs[i - level].clone();
                table[i] = num / den;
            }
        }
        let mut poly = Self::constant(table[n - 1].clone());
        for i in (0..n - 1).rev() {
            let factor = Self::new(vec![-xs[i].clone(), T::one()]);
            poly = &(&poly * &factor) + &Self::constant(table[i].clone());
        }
        Ok(poly)
    }
}

impl Polynomial<Ratio<BigInt>> {
    /// Coefficients as integers, if every denominator is one.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|d| self.coefficient(d) + rhs.coefficient(d)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|d| self.coefficient(d) - rhs.coefficient(d)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

fn render_owned(terms: impl IntoIterator<Item = (bool, String, String)>) -> String {
    let mut out = String::new();
    for (negative, magnitude, monomial) in terms {
        let body = match (magnitude.as_str(), monomial.is_empty()) {
            (_, true) => magnitude,
            ("1", false) => monomial,
            (m, false) => format!("{m}*{monomial}"),
        };
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl<T: Scalar + Signed + Display> Polynomial<T> {
    /// Ascending monomials, e.g. `2 - 3*k + k^2`.
    pub fn render(&self, var: &str) -> String {
        render_owned(self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(d, c)| {
            (c.is_negative(), c.abs().to_string(), power(var, d as u32))
        }))
    }
}

impl<T: Scalar + Signed + Display> Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("k"))
    }
}

/// Sparse polynomial in `x` and `y`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct BivariatePolynomial<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> BivariatePolynomial<T> {
    pub fn zero() -> Self {
        BivariatePolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(T::one(), 0, 1)
    }

    pub fn monomial(c: T, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), T)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: T) {
        let entry = self.terms.entry((i, j)).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (&(i, j), c)| {
            acc + c.clone() * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
        })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BivariatePolynomial<U> {
        BivariatePolynomial::from_terms(self.terms.iter().map(|(&k, c)| (k, f(c))))
    }
}

impl<T: Scalar> Add for &BivariatePolynomial<T> {
    type Output = BivariatePolynomial<T>;

    fn add(self, rhs: Self) -> BivariatePolynomial<T> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &BivariatePolynomial<T> {
    type Output = BivariatePolynomial<T>;

    fn mul(self, rhs: Self) -> BivariatePolynomial<T> {
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Add for BivariatePolynomial<T> {
    type Output = BivariatePolynomial<T>;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Mul for BivariatePolynomial<T> {
    type Output = BivariatePolynomial<T>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar + Signed + Display> BivariatePolynomial<T> {
    /// Monomials by total degree, then by falling power of `x`:
    /// `x + y + y^2`.
    pub fn render(&self) -> String {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
        render_owned(keys.into_iter().map(|(i, j)| {
            let c = &self.terms[&(i, j)];
            let monomial = match (power("x", i), power("y", j)) {
                (a, b) if a.is_empty() => b,
                (a, b) if b.is_empty() => a,
                (a, b) => format!("{a}*{b}"),
            };
            (c.is_negative(), c.abs().to_string(), monomial)
        }))
    }
}

impl<T: Scalar + Signed + Display> Display for BivariatePolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integer, Rational, RationalPolynomial};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn pts(data: &[(i64, i64)]) -> Vec<(i64, Rational)> {
        data.iter().map(|&(x, y)| (x, q(y))).collect()
    }

    #[test]
    fn interpolates_g1_flow_samples() {
        let p = RationalPolynomial::interpolate(&pts(&[(1, 0), (2, 0), (3, 2)])).unwrap();
        assert_eq!(p, RationalPolynomial::from_integers(&[2, -3, 1]));
        assert_eq!(p.render("k"), "2 - 3*k + k^2");
    }

    #[test]
    fn interpolation_edge_cases() {
        let c = RationalPolynomial::interpolate(&pts(&[(5, 7)])).unwrap();
        assert_eq!(c, RationalPolynomial::constant(q(7)));
        let sq = RationalPolynomial::interpolate(&pts(&[(0, 0), (1, 1), (2, 4), (3, 9)])).unwrap();
        assert_eq!(sq, RationalPolynomial::monomial(q(1), 2));
        assert_eq!(
            RationalPolynomial::interpolate(&pts(&[(1, 0), (1, 2)])),
            Err(Error::DuplicateAbscissa(1))
        );
        assert_eq!(RationalPolynomial::interpolate(&[]), Err(Error::NoSamplePoints));
    }

    #[test]
    fn evaluation_at_negative_arguments() {
        let p = RationalPolynomial::from_integers(&[2, -3, 1]);
        assert_eq!(p.eval_i64(-1), q(6));
        assert_eq!(p.eval_i64(0), q(2));
        // (k-1)(k-2)^2 reflected and negated is (k+1)(k+2)^2.
        let g2 = &RationalPolynomial::linear_factor(1) * &RationalPolynomial::linear_factor(2).pow(2);
        let recip = -&g2.reflect();
        let expected = &RationalPolynomial::linear_factor(-1) * &RationalPolynomial::linear_factor(-2).pow(2);
        assert_eq!(recip, expected);
    }

    #[test]
    fn rendering() {
        assert_eq!(RationalPolynomial::zero().render("k"), "0");
        assert_eq!(RationalPolynomial::one().render("k"), "1");
        assert_eq!(RationalPolynomial::from_integers(&[-1, 1]).render("l"), "-1 + l");
        assert_eq!(RationalPolynomial::from_integers(&[0, -1, 0, 2]).render("k"), "-k + 2*k^3");
        let half = RationalPolynomial::new(vec![q(1), Rational::new(3.into(), 2.into()), Rational::new(1.into(), 2.into())]);
        assert_eq!(half.render("k"), "1 + 3/2*k + 1/2*k^2");
        let t = BivariatePolynomial::<Integer>::from_terms([((0, 2), 1.into()), ((1, 0), 1.into()), ((0, 1), 1.into())]);
        assert_eq!(t.render(), "x + y + y^2");
        let u = BivariatePolynomial::<Integer>::from_terms([((1, 1), (-2).into()), ((0, 0), 3.into()), ((2, 0), 1.into())]);
        assert_eq!(u.render(), "3 + x^2 - 2*x*y");
        assert_eq!(BivariatePolynomial::<Integer>::zero().render(), "0");
    }

    #[test]
    fn bivariate_evaluation() {
        let t = BivariatePolynomial::<Rational>::from_terms([((1, 0), q(1)), ((0, 1), q(1)), ((0, 2), q(1))]);
        assert_eq!(t.eval(&q(0), &q(1)), q(2));
        assert_eq!(t.eval(&q(2), &q(2)), q(8));
        assert_eq!(BivariatePolynomial::<Rational>::one().eval(&q(-3), &Rational::new(1.into(), 2.into())), q(1));
        let prod = &BivariatePolynomial::<Integer>::x() * &(&BivariatePolynomial::x() + &BivariatePolynomial::y());
        assert_eq!(prod.coefficient(2, 0), 1.into());
        assert_eq!(prod.coefficient(1, 1), 1.into());
    }

    #[test]
    fn works_over_floats_and_small_rationals() {
        let p = Polynomial::<f64>::interpolate(&[(0, 1.0), (1, 2.0), (2, 5.0)]).unwrap();
        assert!((p.eval(&3.0) - 10.0).abs() < 1e-12);
        let r = Polynomial::<Ratio<i64>>::interpolate(&[(1, Ratio::from_integer(0)), (2, Ratio::from_integer(0)), (3, Ratio::from_integer(2))]).unwrap();
        assert_eq!(r, Polynomial::from_integers(&[2, -3, 1]));
    }

    #[test]
    fn integer_coefficients() {
        assert_eq!(
            RationalPolynomial::from_integers(&[2, -3, 1]).integer_coefficients(),
            Some(vec![2.into(), (-3).into(), 1.into()])
        );
        assert_eq!(RationalPolynomial::constant(Rational::new(1.into(), 2.into())).integer_coefficients(), None);
    }

    proptest! {
        #[test]
        fn interpolation_reproduces_samples_and_probes(coeffs in prop::collection::vec(-20i64..20, 1..6)) {
            let p = RationalPolynomial::from_integers(&coeffs);
            let d = coeffs.len() - 1;
            let samples: Vec<_> = (0..=d as i64).map(|k| (k + 3, p.eval_i64(k + 3))).collect();
            let fitted = RationalPolynomial::interpolate(&samples).unwrap();
            for (x, y) in &samples {
                prop_assert_eq!(&fitted.eval_i64(*x), y);
            }
            for probe in -5..5 {
                prop_assert_eq!(fitted.eval_i64(probe), p.eval_i64(probe));
            }
        }

        #[test]
        fn ring_laws(a in prop::collection::vec(-9i64..9, 0..5), b in prop::collection::vec(-9i64..9, 0..5), x in -6i64..6) {
            let (pa, pb) = (RationalPolynomial::from_integers(&a), RationalPolynomial::from_integers(&b));
            prop_assert_eq!((&pa * &pb).eval_i64(x), pa.eval_i64(x) * pb.eval_i64(x));
            prop_assert_eq!((&pa + &pb).eval_i64(x), pa.eval_i64(x) + pb.eval_i64(x));
            prop_assert_eq!((&pa - &pb).eval_i64(x), pa.eval_i64(x) - pb.eval_i64(x));
            prop_assert_eq!(pa.reflect().eval_i64(x), pa.eval_i64(-x));
        }
    }
}
