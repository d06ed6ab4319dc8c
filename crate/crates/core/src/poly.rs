//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Variable 0 is `x`. With two variables the second is `y`; with more they are
//! `y1, y2, …`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    arity: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MPoly {
    pub fn zero(arity: usize) -> Self {
        MPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    /// The variable with index `i`.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable {i} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    pub fn monomial(exponents: Exponents, c: impl Into<BigInt>) -> Self {
        let mut p = MPoly::zero(exponents.len());
        p.add_term(exponents, c.into());
        p
    }

    pub fn from_terms<I, C>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut p = MPoly::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: e.len(),
                });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical print order: descending total degree, then
    /// descending exponent vector.
    pub fn canonical_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by_key(|(e, _)| (Reverse(e.iter().sum::<u32>()), Reverse(*e)));
        t
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Exponents, c: BigInt) {
        assert_eq!(exponents.len(), self.arity, "exponent vector arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &MPoly) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_arity(other)?;
        let mut out = MPoly::zero(self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut n: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(self.arity);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.arity);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        MPoly {
            arity: self.arity,
            terms,
        }
    }

    /// Multiplies by the monomial with the given exponents.
    pub fn shift_exponents(&self, by: &[u32]) -> MPoly {
        assert_eq!(by.len(), self.arity);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        MPoly {
            arity: self.arity,
            terms,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Value with every variable set to 1.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Univariate polynomial obtained by setting every `y` variable equal to `x`.
    pub fn substitute_y_with_x(&self) -> MPoly {
        let mut out = MPoly::zero(1);
        for (e, c) in &self.terms {
            out.add_term(vec![e.iter().sum()], c.clone());
        }
        out
    }

    /// Univariate polynomial obtained by setting every `y` variable to 1.
    pub fn set_y_to_one(&self) -> MPoly {
        let mut out = MPoly::zero(1);
        for (e, c) in &self.terms {
            out.add_term(vec![e[0]], c.clone());
        }
        out
    }

    /// Bivariate polynomial obtained by setting `y1 = … = yk = y`.
    pub fn identify_y_variables(&self) -> MPoly {
        let mut out = MPoly::zero(2);
        for (e, c) in &self.terms {
            out.add_term(vec![e[0], e[1..].iter().sum()], c.clone());
        }
        out
    }

    /// `(v + c)^n` in the given variable.
    pub fn binomial_power(arity: usize, var: usize, c: &BigInt, n: u32) -> MPoly {
        let mut out = MPoly::zero(arity);
        let mut binom = BigInt::one();
        for k in 0..=n {
            // term binom(n, k) v^k c^(n-k)
            let mut e = vec![0; arity];
            e[var] = k;
            out.add_term(e, &binom * c.pow(n - k));
            binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
        }
        out
    }

    /// Substitutes `v -> v + c` for each `y` variable.
    pub fn translate_y(&self, c: &BigInt) -> MPoly {
        let mut out = MPoly::zero(self.arity);
        for (e, coef) in &self.terms {
            let mut term = MPoly::monomial(
                core::iter::once(e[0])
                    .chain(core::iter::repeat_n(0, self.arity - 1))
                    .collect(),
                coef.clone(),
            );
            for (i, &k) in e.iter().enumerate().skip(1) {
                if k > 0 {
                    term = &term * &MPoly::binomial_power(self.arity, i, c, k);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Maps each monomial `x^a ∏ y_i^{b_i}` to
    /// `x^{deg-a} (x+1)^{a-Σb} ∏ (y_i+1)^{b_i}`.
    ///
    /// This is `x^deg · h((x+1)/x, (y_1+1)/(x+1), …)` expanded term by term.
    pub fn triangle_transform(&self, deg: u32) -> Result<MPoly> {
        let one = BigInt::one();
        let mut out = MPoly::zero(self.arity);
        for (e, c) in &self.terms {
            let a = e[0];
            let b: u32 = e[1..].iter().sum();
            if a > deg || b > a {
                return Err(Error::LeavesPolynomialRing);
            }
            let mut x_part = vec![0; self.arity];
            x_part[0] = deg - a;
            let mut term =
                MPoly::binomial_power(self.arity, 0, &one, a - b).shift_exponents(&x_part);
            for (i, &k) in e.iter().enumerate().skip(1) {
                if k > 0 {
                    term = &term * &MPoly::binomial_power(self.arity, i, &one, k);
                }
            }
            out = &out + &term.scale(c);
        }
        Ok(out)
    }

    /// Inverts [`MPoly::triangle_transform`] for the given degree.
    ///
    /// The image of `x^a y^b` has lowest `x`-power `x^{deg-a}`, with slice
    /// `∏(y_i+1)^{b_i}`. Peeling off the slice of lowest `x`-power, translating
    /// it by `y -> y - 1` and subtracting its image solves the triangular
    /// system one `x`-degree at a time.
    pub fn inverse_triangle_transform(&self, deg: u32) -> Result<MPoly> {
        let minus_one = -BigInt::one();
        let mut rest = self.clone();
        let mut h = MPoly::zero(self.arity);
        while let Some(e) = rest.terms.keys().map(|e| e[0]).min() {
            if e > deg {
                return Err(Error::NonPolynomialResult);
            }
            let a = deg - e;
            let mut slice = MPoly::zero(self.arity);
            for (exp, c) in rest.terms.iter().filter(|(exp, _)| exp[0] == e) {
                let mut y_only = exp.clone();
                y_only[0] = 0;
                slice.add_term(y_only, c.clone());
            }
            let mut layer = slice.translate_y(&minus_one);
            let mut x_part = vec![0; self.arity];
            x_part[0] = a;
            layer = layer.shift_exponents(&x_part);
            if layer
                .terms
                .keys()
                .any(|exp| exp[1..].iter().sum::<u32>() > a)
            {
                return Err(Error::NonPolynomialResult);
            }
            rest = &rest - &layer.triangle_transform(deg)?;
            h = &h + &layer;
        }
        Ok(h)
    }

    fn var_names(&self) -> Vec<String> {
        var_names(self.arity)
    }

    /// Parses the canonical text form, e.g. `"5*x^2 + 3*x*y - y^2 + 3"`; the
    /// `*` may be omitted, as in `"5x^2+3xy"`.
    pub fn parse(s: &str, arity: usize) -> Result<MPoly> {
        let names = var_names(arity);
        let err = |m: &str| Error::PolyParse(format!("{m} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut out = MPoly::zero(arity);
        let mut chunks = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                chunks.push(&compact[start..i]);
                start = i;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (neg, body) = match chunk.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, chunk.strip_prefix('+').unwrap_or(chunk)),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let mut coeff = BigInt::one();
            let mut exps = vec![0u32; arity];
            let chars: Vec<char> = body.chars().collect();
            let mut i = 0;
            let mut expect_factor = true;
            while i < chars.len() {
                if chars[i] == '*' {
                    if expect_factor {
                        return Err(err("empty factor"));
                    }
                    expect_factor = true;
                    i += 1;
                    continue;
                }
                expect_factor = false;
                let start = i;
                if chars[i].is_ascii_digit() {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    coeff *= digits.parse::<BigInt>().map_err(|_| err("bad integer"))?;
                    continue;
                }
                if !chars[i].is_ascii_alphabetic() {
                    return Err(err(&format!("unexpected {:?}", chars[i])));
                }
                i += 1;
                // indexed variables carry their index as trailing digits
                if arity > 2 {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let name: String = chars[start..i].iter().collect();
                let mut power = 1;
                if chars.get(i) == Some(&'^') {
                    let p0 = i + 1;
                    i = p0;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[p0..i].iter().collect();
                    power = digits.parse::<u32>().map_err(|_| err("bad exponent"))?;
                }
                let idx = names
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| err(&format!("unknown variable {name:?}")))?;
                exps[idx] += power;
            }
            if expect_factor {
                return Err(err("empty factor"));
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

/// Variable names for the given arity: `x`, then `y` or `y1, y2, …`.
pub fn var_names(arity: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(arity);
    if arity > 0 {
        names.push("x".to_string());
    }
    match arity {
        0 | 1 => {}
        2 => names.push("y".to_string()),
        _ => names.extend((1..arity).map(|i| format!("y{i}"))),
    }
    names
}

impl fmt::Display for MPoly {
    /// Canonical form: descending total degree then descending exponents,
    /// `c*x^a*y^b` with unit coefficients and zero exponents elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.var_names();
        for (i, (e, c)) in self.canonical_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let constant = e.iter().all(|&k| k == 0);
            if !abs.is_one() || constant {
                factors.push(abs.to_string());
            }
            for (name, &k) in names.iter().zip(e) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    /// Panics on arity mismatch; see [`MPoly::try_add`].
    fn add(self, rhs: &MPoly) -> MPoly {
        self.try_add(rhs).expect("arity mismatch")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        self.try_sub(rhs).expect("arity mismatch")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MPoly {
            arity: self.arity,
            terms,
        }
    }
}

impl core::iter::Sum for MPoly {
    /// Sums bivariate polynomials; an empty sum is the bivariate zero.
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        let mut iter = iter.peekable();
        let arity = iter.peek().map_or(2, MPoly::arity);
        iter.fold(MPoly::zero(arity), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(s: &str) -> MPoly {
        MPoly::parse(s, 2).unwrap()
    }

    #[test]
    fn square_of_binomial() {
        let x1 = MPoly::parse("x + 1", 1).unwrap();
        assert_eq!((&x1 * &x1).to_string(), "x^2 + 2*x + 1");
        assert_eq!(x1.pow(0), MPoly::one(1));
        let y1 = MPoly::binomial_power(2, 1, &BigInt::one(), 2);
        assert_eq!(y1, bi("y^2 + 2*y + 1"));
    }

    #[test]
    fn printing() {
        assert_eq!(MPoly::zero(2).to_string(), "0");
        assert_eq!(
            bi("3 + 3*y + 8*x + y^2 + 3*x*y + 5*x^2").to_string(),
            "5*x^2 + 3*x*y + y^2 + 8*x + 3*y + 3"
        );
        assert_eq!(bi("-x - 2").to_string(), "-x - 2");
        assert_eq!(
            MPoly::parse("x*y1*y2^3 - 1", 3).unwrap().to_string(),
            "x*y1*y2^3 - 1"
        );
    }

    #[test]
    fn parse_errors() {
        assert!(MPoly::parse("x + z", 2).is_err());
        assert!(MPoly::parse("", 2).is_err());
        assert!(MPoly::parse("x^", 2).is_err());
        assert!(MPoly::parse("x + ", 2).is_err());
    }

    #[test]
    fn arity_mismatch() {
        assert_eq!(
            MPoly::one(1).try_add(&MPoly::one(2)),
            Err(Error::ArityMismatch { left: 1, right: 2 })
        );
        assert!(MPoly::from_terms(2, [(vec![1], 1)]).is_err());
    }

    #[test]
    fn transform_examples() {
        let h = bi("x^2*y^2 + x^2*y + x^2 + 2*x*y + 3*x + 1");
        let f = h.triangle_transform(2).unwrap();
        assert_eq!(f.to_string(), "5*x^2 + 3*x*y + y^2 + 8*x + 3*y + 3");
        assert_eq!(f.inverse_triangle_transform(2).unwrap(), h);
        assert_eq!(MPoly::one(2).triangle_transform(4).unwrap(), bi("x^4"));
        assert_eq!(
            bi("x^4").inverse_triangle_transform(4).unwrap(),
            MPoly::one(2)
        );
    }

    #[test]
    fn transform_precondition() {
        assert_eq!(
            bi("x^3").triangle_transform(2),
            Err(Error::LeavesPolynomialRing)
        );
        assert_eq!(
            bi("x*y^2").triangle_transform(2),
            Err(Error::LeavesPolynomialRing)
        );
        assert_eq!(
            bi("x^3").inverse_triangle_transform(2),
            Err(Error::NonPolynomialResult)
        );
    }

    #[test]
    fn degree_zero_is_identity_on_constants() {
        let c = MPoly::constant(2, 7);
        assert_eq!(c.triangle_transform(0).unwrap(), c);
        assert_eq!(c.inverse_triangle_transform(0).unwrap(), c);
    }

    #[test]
    fn specialisations() {
        let f = bi("5*x^2 + 3*x*y + y^2 + 8*x + 3*y + 3");
        assert_eq!(f.eval_at_ones(), BigInt::from(23));
        assert_eq!(f.substitute_y_with_x().to_string(), "9*x^2 + 11*x + 3");
        let h = bi("x^2*y^2 + x^2*y + x^2 + 2*x*y + 3*x + 1");
        assert_eq!(h.set_y_to_one().to_string(), "3*x^2 + 5*x + 1");
    }
}
