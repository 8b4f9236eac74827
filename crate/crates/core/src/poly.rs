//! Univariate polynomials over exact rationals, and quotients of them.
//!
//! [`RationalFn`] keeps a normal form — numerator and denominator coprime,
//! denominator monic — so equality is structural. Partial fraction
//! decomposition handles simple rational poles, which is all the diagram
//! machinery ever produces.

use std::collections::BTreeSet;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn var() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots<I: IntoIterator<Item = Rational>>(roots: I) -> Self {
        roots.into_iter().fold(Poly::one(), |acc, r| {
            &acc * &Poly::new(vec![-r, Rational::one()])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `inner` for the variable, by Horner's scheme.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Quotient and remainder of polynomial long division.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = rem.leading().unwrap() * &lead_inv;
            let shift = dr - dd;
            quot[shift] = factor.clone();
            let mut coeffs = rem.coeffs;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let sub = c * &factor;
                coeffs[i + shift] -= sub;
            }
            rem = Poly::new(coeffs);
        }
        (Poly::new(quot), rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Human-readable rendering, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (coeff_part.is_empty(), var_part.is_empty()) {
                (true, _) => out.push_str(&var_part),
                (_, true) => out.push_str(&coeff_part),
                _ => out.push_str(&format!("{coeff_part}*{var_part}")),
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// A reduced quotient of polynomials with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFn {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lead = den.leading().unwrap().clone();
        RationalFn {
            num: num.scale(&lead.recip()),
            den: den.scale(&lead.recip()),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn mul_poly(&self, p: &Poly) -> RationalFn {
        RationalFn::new(&self.num * p, self.den.clone())
    }

    /// Substitutes a polynomial for the variable.
    pub fn compose_poly(&self, inner: &Poly) -> RationalFn {
        RationalFn::new(self.num.compose(inner), self.den.compose(inner))
    }

    /// Equality by cross multiplication, independent of the normal form.
    pub fn eq_cross_mul(&self, other: &RationalFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn render(&self, var: &str) -> String {
        format!("({}) / ({})", self.num.render(var), self.den.render(var))
    }

    /// Decomposes a proper rational function with simple rational poles
    /// into `sum residue / (x - pole)`, sorted by pole.
    ///
    /// The residue at a simple pole `p` of `num/den` is `num(p)/den'(p)`.
    pub fn partial_fractions(&self) -> Result<Vec<(Rational, Rational)>> {
        if self.num.is_zero() {
            return Ok(Vec::new());
        }
        assert!(
            self.num.degree() < self.den.degree(),
            "partial fractions need a proper rational function"
        );
        let deriv = self.den.derivative();
        let repeated = Poly::gcd(&self.den, &deriv);
        if repeated.degree().unwrap_or(0) > 0 {
            return Err(Error::NonSimplePole(repeated.render("x")));
        }
        let degree = self.den.degree().unwrap();
        let roots = rational_roots(&self.den);
        if roots.len() != degree {
            return Err(Error::IrrationalPole(self.den.render("x")));
        }
        let mut out: Vec<(Rational, Rational)> = roots
            .into_iter()
            .map(|p| {
                let residue = self.num.eval(&p) / deriv.eval(&p);
                (p, residue)
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }
}

/// All rational roots of a polynomial, found through the rational root
/// theorem on the integer-cleared coefficients.
fn rational_roots(p: &Poly) -> Vec<Rational> {
    if p.is_zero() || p.degree() == Some(0) {
        return Vec::new();
    }
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();

    let mut roots = Vec::new();
    let mut low = 0;
    while ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rational::zero());
    }
    let a0 = ints[low].magnitude().clone();
    let an = ints.last().unwrap().magnitude().clone();
    let mut candidates: BTreeSet<Rational> = BTreeSet::new();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            let q = Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()));
            candidates.insert(q.clone());
            candidates.insert(-q);
        }
    }
    for cand in candidates {
        if p.eval(&cand).is_zero() {
            roots.push(cand);
        }
    }
    roots
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (prime, mult) in factorize(n) {
        let base = out.clone();
        let mut power = BigUint::one();
        for _ in 0..mult {
            power *= &prime;
            out.extend(base.iter().map(|d| d * &power));
        }
    }
    out
}

fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut push = |p: BigUint, m: u32| {
        if m > 0 {
            out.push((p, m));
        }
    };
    for small in [2u32, 3] {
        let prime = BigUint::from(small);
        let mut m = 0;
        while (&n % &prime).is_zero() {
            n /= &prime;
            m += 1;
        }
        push(prime, m);
    }
    let mut d = BigUint::from(5u32);
    let mut step = 2u32;
    while &d * &d <= n {
        let mut m = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            m += 1;
        }
        push(d.clone(), m);
        d += step;
        step = 6 - step;
    }
    if !n.is_one() {
        push(n, 1);
    }
    out
}
