//! Exact arithmetic in GF(q) for prime-power q and in extension fields
//! GF(q^m), with coordinate expansion to the declared base field.
//!
//! Elements are encoded as integer indices in `[0, order)`: the base-p
//! (respectively base-q) digits of the index are the coefficients of the
//! element in the fixed polynomial basis `{1, t, ..., t^(m-1)}`. Index 0 is
//! the additive identity and index 1 the multiplicative identity. The
//! modulus polynomial is chosen deterministically (lowest weight, then
//! smallest encoding, first irreducible found by trial division), so element
//! encodings are reproducible across runs.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element, encoded as an integer index in `[0, order)`.
pub type Elem = u64;

/// Fields with order at most this use log/antilog tables for multiplication.
pub const TABLE_ORDER_LIMIT: u64 = 1 << 16;

/// Hard cap on constructible field orders.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Fields with order at most this additionally get full operation tables.
const SMALL_ORDER_LIMIT: u64 = 256;

struct LogTables {
    /// `exp[i] = g^i` for a fixed generator g, length `order - 1`.
    exp: Vec<u32>,
    /// `log[exp[i]] = i`; entry 0 is unused.
    log: Vec<u32>,
}

struct SmallTables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// A finite field GF(p^e), possibly tagged as an extension of a base field.
pub struct Field {
    prime: u64,
    /// Order of the coefficient field: `prime` for directly constructed
    /// fields, `base.order()` for extensions.
    coeff_order: u64,
    /// Degree over the coefficient field.
    ext_degree: u32,
    order: u64,
    base: Option<Arc<Field>>,
    /// Monic irreducible modulus, ascending coefficients over the
    /// coefficient field, length `ext_degree + 1`.
    modulus: Vec<Elem>,
    log_tables: Option<LogTables>,
    small_tables: Option<SmallTables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(order={}", self.order)?;
        if let Some(base) = &self.base {
            write!(f, ", base_order={}", base.order())?;
        }
        write!(f, ")")
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.prime == other.prime
            && self.coeff_order == other.coeff_order
            && self.ext_degree == other.ext_degree
            && self.order == other.order
            && self.modulus == other.modulus
            && match (&self.base, &other.base) {
                (None, None) => true,
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
    }
}

impl Eq for Field {}

/// Coefficient-field arithmetic used while building a field: either the
/// prime field (integers mod p) or an already-constructed base field.
enum CoeffOps<'a> {
    Prime(u64),
    Base(&'a Field),
}

impl CoeffOps<'_> {
    fn order(&self) -> u64 {
        match self {
            CoeffOps::Prime(p) => *p,
            CoeffOps::Base(f) => f.order(),
        }
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        match self {
            CoeffOps::Prime(p) => (a + b) % p,
            CoeffOps::Base(f) => f.add(a, b),
        }
    }

    fn sub(&self, a: Elem, b: Elem) -> Elem {
        match self {
            CoeffOps::Prime(p) => (a + p - b) % p,
            CoeffOps::Base(f) => f.sub(a, b),
        }
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self {
            CoeffOps::Prime(p) => (a * b) % p,
            CoeffOps::Base(f) => f.mul(a, b),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(base: u64, exp: u32, cap: u64) -> std::result::Result<u64, Error> {
    let order = (base as u128)
        .checked_pow(exp)
        .unwrap_or(u128::MAX)
        .min(u64::MAX as u128) as u64;
    if order > cap {
        return Err(Error::FieldTooLarge(order, cap));
    }
    Ok(order)
}

/// Polynomial helpers over a coefficient field. Polynomials are coefficient
/// vectors in ascending order with no trailing-zero guarantees.
mod poly {
    use super::{CoeffOps, Elem};

    pub fn deg(p: &[Elem]) -> Option<usize> {
        p.iter().rposition(|&c| c != 0)
    }

    pub fn mul(a: &[Elem], b: &[Elem], ops: &CoeffOps) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                out[i + j] = ops.add(out[i + j], ops.mul(x, y));
            }
        }
        out
    }

    /// Remainder of `a` divided by the monic polynomial `m`.
    pub fn rem_monic(a: &[Elem], m: &[Elem], ops: &CoeffOps) -> Vec<Elem> {
        let md = deg(m).expect("modulus must be non-zero");
        debug_assert_eq!(m[md], 1, "modulus must be monic");
        let mut r = a.to_vec();
        while let Some(rd) = deg(&r) {
            if rd < md {
                break;
            }
            let c = r[rd];
            let shift = rd - md;
            for (j, &mj) in m.iter().enumerate().take(md + 1) {
                r[shift + j] = ops.sub(r[shift + j], ops.mul(c, mj));
            }
        }
        r.truncate(md);
        r.resize(md, 0);
        r
    }

    pub fn mul_mod(a: &[Elem], b: &[Elem], m: &[Elem], ops: &CoeffOps) -> Vec<Elem> {
        rem_monic(&mul(a, b, ops), m, ops)
    }
}

/// Decompose an element index into digits base `radix`, lowest first.
fn to_digits(mut a: Elem, radix: u64, len: u32) -> Vec<Elem> {
    let mut out = Vec::with_capacity(len as usize);
    for _ in 0..len {
        out.push(a % radix);
        a /= radix;
    }
    out
}

fn from_digits(digits: &[Elem], radix: u64) -> Elem {
    let mut acc = 0;
    for &d in digits.iter().rev() {
        acc = acc * radix + d;
    }
    acc
}

/// Find the monic irreducible polynomial of the given degree with the fewest
/// non-zero coefficients, breaking ties by smallest integer encoding of the
/// non-leading coefficients. Irreducibility is checked by trial division.
fn find_modulus(degree: u32, ops: &CoeffOps) -> Vec<Elem> {
    let q = ops.order();
    if degree == 1 {
        // t itself: the quotient is the coefficient field with t = 0.
        return vec![0, 1];
    }
    let span = q.pow(degree);
    for weight in 1..=(degree as usize + 1) {
        for value in 0..span {
            let mut cand = to_digits(value, q, degree);
            cand.push(1);
            let w = cand.iter().filter(|&&c| c != 0).count();
            if w == weight && is_irreducible(&cand, ops) {
                return cand;
            }
        }
    }
    unreachable!("an irreducible polynomial exists for every degree");
}

fn is_irreducible(f: &[Elem], ops: &CoeffOps) -> bool {
    let q = ops.order();
    let d = poly::deg(f).unwrap();
    if d == 1 {
        return true;
    }
    if f[0] == 0 {
        return false; // divisible by t
    }
    for div_deg in 1..=(d / 2) {
        let count = q.pow(div_deg as u32);
        for low in 0..count {
            let mut g = to_digits(low, q, div_deg as u32);
            g.push(1);
            let r = poly::rem_monic(f, &g, ops);
            if poly::deg(&r).is_none() {
                return false;
            }
        }
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// Construct GF(p^e) over the prime field GF(p).
    pub fn new(p: u64, e: u32) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("field degree must be >= 1".into()));
        }
        let order = checked_pow(p, e, TABLE_ORDER_LIMIT)?;
        let ops = CoeffOps::Prime(p);
        let modulus = find_modulus(e, &ops);
        Ok(Arc::new(Field::finish(p, p, e, order, None, modulus)))
    }

    /// Construct GF(q^m) as an extension of `base` = GF(q).
    ///
    /// Orders up to 2^16 get multiplication tables; larger orders (up to
    /// 2^20) fall back to polynomial arithmetic.
    pub fn extension(base: &Arc<Field>, m: u32) -> Result<Arc<Field>> {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be >= 1".into(),
            ));
        }
        let order = checked_pow(base.order(), m, MAX_FIELD_ORDER)?;
        let ops = CoeffOps::Base(base);
        let modulus = find_modulus(m, &ops);
        Ok(Arc::new(Field::finish(
            base.prime,
            base.order(),
            m,
            order,
            Some(Arc::clone(base)),
            modulus,
        )))
    }

    /// Construct GF(q) from a prime-power order.
    pub fn from_order(q: u64) -> Result<Arc<Field>> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = prime_factors(q)[0];
        let mut e = 0;
        let mut acc = 1u64;
        while acc < q {
            acc *= p;
            e += 1;
        }
        if acc != q {
            return Err(Error::NotPrimePower(q));
        }
        Field::new(p, e)
    }

    fn finish(
        prime: u64,
        coeff_order: u64,
        ext_degree: u32,
        order: u64,
        base: Option<Arc<Field>>,
        modulus: Vec<Elem>,
    ) -> Field {
        let mut field = Field {
            prime,
            coeff_order,
            ext_degree,
            order,
            base,
            modulus,
            log_tables: None,
            small_tables: None,
        };
        if order <= TABLE_ORDER_LIMIT {
            field.log_tables = Some(field.build_log_tables());
        }
        if order <= SMALL_ORDER_LIMIT {
            field.small_tables = Some(field.build_small_tables());
        }
        field
    }

    fn coeff_ops(&self) -> CoeffOps<'_> {
        match &self.base {
            Some(b) => CoeffOps::Base(b),
            None => CoeffOps::Prime(self.prime),
        }
    }

    fn poly_of(&self, a: Elem) -> Vec<Elem> {
        to_digits(a, self.coeff_order, self.ext_degree)
    }

    fn elem_of(&self, p: &[Elem]) -> Elem {
        from_digits(p, self.coeff_order)
    }

    /// Multiplication by direct polynomial arithmetic, table-free.
    fn mul_poly(&self, a: Elem, b: Elem) -> Elem {
        let ops = self.coeff_ops();
        let prod = poly::mul_mod(&self.poly_of(a), &self.poly_of(b), &self.modulus, &ops);
        self.elem_of(&prod)
    }

    fn build_log_tables(&self) -> LogTables {
        let n = (self.order - 1) as usize;
        let mut exp = vec![0u32; n.max(1)];
        let mut log = vec![0u32; self.order as usize];
        let g = self.find_generator();
        let mut acc: Elem = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc as u32;
            log[acc as usize] = i as u32;
            acc = self.mul_poly(acc, g);
        }
        debug_assert_eq!(acc, 1, "generator order must be {}", n);
        LogTables { exp, log }
    }

    fn find_generator(&self) -> Elem {
        if self.order == 2 {
            return 1;
        }
        let n = self.order - 1;
        let factors = prime_factors(n);
        'cand: for c in 2..self.order {
            for &f in &factors {
                if self.pow_poly(c, n / f) == 1 {
                    continue 'cand;
                }
            }
            return c;
        }
        unreachable!("every finite field has a primitive element");
    }

    fn pow_poly(&self, mut a: Elem, mut e: u64) -> Elem {
        let mut acc: Elem = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, a);
            }
            a = self.mul_poly(a, a);
            e >>= 1;
        }
        acc
    }

    fn build_small_tables(&self) -> SmallTables {
        let n = self.order as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        let ops = self.coeff_ops();
        for a in 0..n as u64 {
            let pa = self.poly_of(a);
            for b in 0..n as u64 {
                let pb = self.poly_of(b);
                let sum: Vec<Elem> = pa
                    .iter()
                    .zip(pb.iter())
                    .map(|(&x, &y)| ops.add(x, y))
                    .collect();
                add[(a * n as u64 + b) as usize] = self.elem_of(&sum) as u16;
                mul[(a * n as u64 + b) as usize] = self.mul_table_free(a, b) as u16;
            }
        }
        for a in 0..n as u64 {
            neg[a as usize] = (0..n as u64)
                .find(|&b| add[(a * n as u64 + b) as usize] == 0)
                .unwrap() as u16;
            if a != 0 {
                inv[a as usize] = (1..n as u64)
                    .find(|&b| mul[(a * n as u64 + b) as usize] == 1)
                    .unwrap() as u16;
            }
        }
        SmallTables { add, mul, neg, inv }
    }

    fn mul_table_free(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.log_tables {
            Some(t) => {
                let n = self.order - 1;
                let s = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % n;
                t.exp[s as usize] as Elem
            }
            None => self.mul_poly(a, b),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.prime
    }

    /// Order of the declared base (coefficient) field.
    pub fn base_order(&self) -> u64 {
        self.coeff_order
    }

    /// Degree over the declared base (coefficient) field.
    pub fn ext_degree(&self) -> u32 {
        self.ext_degree
    }

    pub fn base(&self) -> Option<&Arc<Field>> {
        self.base.as_ref()
    }

    /// Modulus polynomial, ascending coefficients over the base field.
    pub fn modulus(&self) -> &[Elem] {
        &self.modulus
    }

    /// Iterate over all element encodings.
    pub fn elems(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.order && b < self.order);
        if let Some(t) = &self.small_tables {
            return t.add[(a * self.order + b) as usize] as Elem;
        }
        let ops = self.coeff_ops();
        let pa = self.poly_of(a);
        let pb = self.poly_of(b);
        let sum: Vec<Elem> = pa
            .iter()
            .zip(pb.iter())
            .map(|(&x, &y)| ops.add(x, y))
            .collect();
        self.elem_of(&sum)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        debug_assert!(a < self.order);
        if let Some(t) = &self.small_tables {
            return t.neg[a as usize] as Elem;
        }
        let ops = self.coeff_ops();
        let negated: Vec<Elem> = self.poly_of(a).iter().map(|&x| ops.sub(0, x)).collect();
        self.elem_of(&negated)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.order && b < self.order);
        if let Some(t) = &self.small_tables {
            return t.mul[(a * self.order + b) as usize] as Elem;
        }
        self.mul_table_free(a, b)
    }

    /// Multiplicative inverse. Panics on zero; see [`Field::checked_inv`].
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.checked_inv(a).expect("inversion of zero")
    }

    pub fn checked_inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        debug_assert!(a < self.order);
        if let Some(t) = &self.small_tables {
            return Some(t.inv[a as usize] as Elem);
        }
        match &self.log_tables {
            Some(t) => {
                let n = self.order - 1;
                let e = (n - t.log[a as usize] as u64) % n;
                Some(t.exp[e as usize] as Elem)
            }
            None => Some(self.pow_poly(a, self.order - 2)),
        }
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        match &self.log_tables {
            Some(t) => {
                let n = self.order - 1;
                let s = (t.log[a as usize] as u64 % n) as u128 * (e % n) as u128 % n as u128;
                t.exp[s as usize] as Elem
            }
            None => self.pow_poly(a, e),
        }
    }

    /// `a^(q^i)` where q is the order of the declared base field.
    pub fn frob_pow(&self, a: Elem, i: u32) -> Elem {
        let i = i % self.ext_degree;
        let mut e: u64 = 1;
        for _ in 0..i {
            e *= self.coeff_order;
        }
        self.pow(a, e)
    }

    /// Coordinates of `a` over the base field in the polynomial basis
    /// `{1, t, ..., t^(m-1)}`. The map is linear and invertible.
    pub fn expand(&self, a: Elem) -> Vec<Elem> {
        debug_assert!(a < self.order);
        self.poly_of(a)
    }

    /// Inverse of [`Field::expand`].
    pub fn compose(&self, digits: &[Elem]) -> Elem {
        assert_eq!(digits.len(), self.ext_degree as usize);
        debug_assert!(digits.iter().all(|&d| d < self.coeff_order));
        self.elem_of(digits)
    }

    /// Encoding of the basis element `t^i`.
    pub fn basis_elem(&self, i: u32) -> Elem {
        assert!(i < self.ext_degree);
        self.coeff_order.pow(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, e: u32) -> Arc<Field> {
        Field::new(p, e).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let f2 = gf(2, 1);
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.add(1, 1), 0);
        let f3 = gf(3, 1);
        assert_eq!(f3.add(2, 2), 1);
        assert_eq!(f3.mul(2, 2), 1);
    }

    #[test]
    fn gf4_uses_t2_t_1_modulus() {
        let f4 = gf(2, 2);
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        // x * x = x + 1 where x = t has encoding 2 and t+1 has encoding 3.
        assert_eq!(f4.mul(2, 2), 3);
    }

    #[test]
    fn extension_orders() {
        let f2 = gf(2, 1);
        let f8 = Field::extension(&f2, 3).unwrap();
        assert_eq!(f8.order(), 8);
        let f4 = gf(2, 2);
        let f16 = Field::extension(&f4, 2).unwrap();
        assert_eq!(f16.order(), 16);
        assert_eq!(f16.base_order(), 4);
        let identity = Field::extension(&f2, 1).unwrap();
        assert_eq!(identity.order(), 2);
        assert_eq!(identity.add(1, 1), 0);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Field::new(6, 1),
            Err(Error::NonPrimeCharacteristic(6))
        ));
        assert!(matches!(Field::new(2, 17), Err(Error::FieldTooLarge(..))));
        assert!(matches!(Field::from_order(12), Err(Error::NotPrimePower(12))));
        assert_eq!(Field::from_order(16).unwrap().order(), 16);
        assert_eq!(Field::from_order(16).unwrap().characteristic(), 2);
    }

    #[test]
    fn frobenius_on_gf4() {
        let f4 = gf(2, 2);
        // x^2 = x + 1 under t^2 + t + 1.
        assert_eq!(f4.frob_pow(2, 1), 3);
        assert_eq!(f4.frob_pow(3, 1), 2);
    }

    #[test]
    fn frobenius_order_divides_extension_degree() {
        let f2 = gf(2, 1);
        let f8 = Field::extension(&f2, 3).unwrap();
        for a in f8.elems() {
            assert_eq!(f8.frob_pow(a, 3), a);
        }
    }

    #[test]
    fn inverse_identity() {
        for field in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1)] {
            assert_eq!(field.inv(1), 1);
        }
    }

    #[test]
    fn mul_inverse_exhaustive_small_orders() {
        let fields: Vec<Arc<Field>> = vec![
            gf(2, 1),
            gf(3, 1),
            gf(2, 2),
            gf(5, 1),
            gf(7, 1),
            gf(2, 3),
            gf(3, 2),
            gf(11, 1),
            gf(13, 1),
            gf(2, 4),
            gf(2, 8),
            Field::extension(&gf(2, 2), 2).unwrap(),
            Field::extension(&gf(2, 1), 3).unwrap(),
        ];
        for field in fields {
            for a in 1..field.order() {
                assert_eq!(field.mul(a, field.inv(a)), 1, "order {}", field.order());
            }
            // Additive inverses round-trip as well.
            for a in field.elems() {
                assert_eq!(field.add(a, field.neg(a)), 0);
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_base_field() {
        let cases: Vec<Arc<Field>> = vec![
            Field::extension(&gf(2, 1), 3).unwrap(),
            Field::extension(&gf(2, 2), 2).unwrap(),
            Field::extension(&gf(3, 1), 2).unwrap(),
            gf(2, 4),
            gf(3, 2),
        ];
        for field in cases {
            let q = field.base_order();
            let fixed: Vec<Elem> = field
                .elems()
                .filter(|&a| field.frob_pow(a, 1) == a)
                .collect();
            let expected: Vec<Elem> = (0..q).collect();
            assert_eq!(fixed, expected, "field of order {}", field.order());
            // And it is an automorphism.
            for a in field.elems() {
                for b in field.elems() {
                    assert_eq!(
                        field.frob_pow(field.add(a, b), 1),
                        field.add(field.frob_pow(a, 1), field.frob_pow(b, 1))
                    );
                    assert_eq!(
                        field.frob_pow(field.mul(a, b), 1),
                        field.mul(field.frob_pow(a, 1), field.frob_pow(b, 1))
                    );
                }
            }
        }
    }

    #[test]
    fn expand_is_linear_and_invertible() {
        let f8 = Field::extension(&gf(2, 1), 3).unwrap();
        assert_eq!(f8.expand(0), vec![0, 0, 0]);
        let mut seen = std::collections::HashSet::new();
        for a in f8.elems() {
            let coords = f8.expand(a);
            assert_eq!(coords.len(), 3);
            assert_eq!(f8.compose(&coords), a);
            seen.insert(coords.clone());
            for b in f8.elems() {
                let lhs = f8.expand(f8.add(a, b));
                let rhs: Vec<Elem> = f8
                    .expand(a)
                    .iter()
                    .zip(f8.expand(b))
                    .map(|(&x, y)| x ^ y)
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(seen.len(), 8);

        let f4 = gf(2, 2);
        // t + 1 has encoding 3 and coordinates (1, 1).
        assert_eq!(f4.expand(3), vec![1, 1]);
    }

    #[test]
    fn large_table_free_field() {
        // Order above the table limit exercises the polynomial path.
        let f3 = gf(3, 1);
        let big = Field::extension(&f3, 11).unwrap(); // 177147 > 2^16
        assert!(big.order() > TABLE_ORDER_LIMIT);
        let a = big.basis_elem(5);
        let b = big.basis_elem(7);
        let prod = big.mul(a, b);
        assert_eq!(big.mul(prod, big.inv(prod)), 1);
        assert_eq!(big.frob_pow(a, 11), a);
    }
}
