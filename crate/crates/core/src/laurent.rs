//! Multivariate Laurent polynomials with exact coefficient arithmetic.
//!
//! Polynomials are stored as sorted term lists.  The canonical term order is
//! lexicographic on exponent vectors indexed by [`VarId`] (missing entries are
//! implicit zeros), with the leading term first.  The order is total and
//! compatible with multiplication, which the exact-division routine relies on.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Identifier of a variable inside a [`VarRegistry`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub u32);

/// Interning table mapping variable names to [`VarId`]s.
///
/// A registry fixes the meaning of exponent positions, so polynomials may only
/// be combined when they were built against the same registry.
#[derive(Debug, Clone, Default)]
pub struct VarRegistry {
    names: Vec<String>,
    index: HashMap<String, VarId>,
}

impl VarRegistry {
    /// Create an empty registry.
    pub fn new() -> Self {
        Self::default()
    }

    /// Intern a variable name, returning its id (existing or fresh).
    pub fn intern(&mut self, name: &str) -> VarId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = VarId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    /// Look up an already-interned name.
    pub fn get(&self, name: &str) -> Option<VarId> {
        self.index.get(name).copied()
    }

    /// Name of a variable id.
    pub fn name(&self, id: VarId) -> &str {
        &self.names[id.0 as usize]
    }

    /// Number of interned variables.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Whether the registry is empty.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All interned names in id order.
    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Exponent vector of a Laurent term, dense over variable ids with trailing
/// zeros trimmed.  `Monomial::one()` is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<i32>,
}

impl Monomial {
    /// The trivial monomial (all exponents zero).
    pub fn one() -> Self {
        Self { exps: Vec::new() }
    }

    /// Single variable raised to a power.
    pub fn var(v: VarId, exp: i32) -> Self {
        let mut exps = vec![0; v.0 as usize + 1];
        exps[v.0 as usize] = exp;
        let mut m = Self { exps };
        m.trim();
        m
    }

    /// Build from an explicit exponent vector.
    pub fn from_exps(exps: Vec<i32>) -> Self {
        let mut m = Self { exps };
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    /// Exponent of a variable (zero when absent).
    pub fn exp(&self, v: VarId) -> i32 {
        self.exps.get(v.0 as usize).copied().unwrap_or(0)
    }

    /// Whether this is the trivial monomial.
    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.exps.len().max(other.exps.len());
        let mut exps = Vec::with_capacity(n);
        for i in 0..n {
            exps.push(
                self.exps.get(i).copied().unwrap_or(0) + other.exps.get(i).copied().unwrap_or(0),
            );
        }
        let mut m = Self { exps };
        m.trim();
        m
    }

    /// Quotient of two monomials (exponents subtract; always defined for
    /// Laurent exponents).
    pub fn div(&self, other: &Self) -> Self {
        let n = self.exps.len().max(other.exps.len());
        let mut exps = Vec::with_capacity(n);
        for i in 0..n {
            exps.push(
                self.exps.get(i).copied().unwrap_or(0) - other.exps.get(i).copied().unwrap_or(0),
            );
        }
        let mut m = Self { exps };
        m.trim();
        m
    }

    /// Integer power (negative powers allowed).
    pub fn pow(&self, k: i32) -> Self {
        let mut m = Self {
            exps: self.exps.iter().map(|e| e * k).collect(),
        };
        m.trim();
        m
    }

    /// Iterate `(VarId, exponent)` over nonzero entries.
    pub fn iter(&self) -> impl Iterator<Item = (VarId, i32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (VarId(i as u32), e))
    }
}

/// FNV-1a folding a machine word per multiply.  Exponent vectors are short
/// integer keys private to one multiplication, so a small non-keyed hash beats
/// the standard library's DoS-resistant default.
struct Fnv1a(u64);

impl std::hash::Hasher for Fnv1a {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ u64::from(b)).wrapping_mul(0x100_0000_01b3);
        }
    }

    fn write_i32(&mut self, i: i32) {
        self.0 = (self.0 ^ u64::from(i as u32)).wrapping_mul(0x100_0000_01b3);
    }

    fn write_usize(&mut self, i: usize) {
        self.0 = (self.0 ^ i as u64).wrapping_mul(0x100_0000_01b3);
    }

    fn write_u8(&mut self, i: u8) {
        self.0 = (self.0 ^ u64::from(i)).wrapping_mul(0x100_0000_01b3);
    }
}

#[derive(Clone, Default)]
struct MonomialHasher;

impl std::hash::BuildHasher for MonomialHasher {
    type Hasher = Fnv1a;

    fn build_hasher(&self) -> Fnv1a {
        Fnv1a(0xcbf2_9ce4_8422_2325)
    }
}

type TermMap<C> = HashMap<Monomial, C, MonomialHasher>;

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Lexicographic comparison over variable ids with implicit zeros.
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.exps.len().max(other.exps.len());
        for i in 0..n {
            let a = self.exps.get(i).copied().unwrap_or(0);
            let b = other.exps.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// A multivariate Laurent polynomial with coefficients in `C`.
///
/// Invariant: terms are sorted by strictly descending [`Monomial`] order and
/// no coefficient is zero.  The zero polynomial has an empty term list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C: Scalar> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Scalar> LaurentPoly<C> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// A constant polynomial.
    pub fn constant(c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    /// Constant polynomial from a machine integer.
    pub fn int(n: i64) -> Self {
        Self::constant(C::from_i64(n).expect("small integer embeds into any scalar"))
    }

    /// The polynomial consisting of a single variable.
    pub fn var(v: VarId) -> Self {
        Self {
            terms: vec![(Monomial::var(v, 1), C::one())],
        }
    }

    /// A single term `c * m`.
    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    /// Build from unsorted terms, combining duplicates and dropping zeros.
    pub fn from_terms(terms: Vec<(Monomial, C)>) -> Self {
        let mut map: TermMap<C> =
            TermMap::with_capacity_and_hasher(terms.len(), MonomialHasher);
        for (m, c) in terms {
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    e.get_mut().add_assign_ref(&c);
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        Self::from_map(map)
    }

    /// Collect an accumulation map into sorted canonical form.
    fn from_map(map: TermMap<C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = map.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Self { terms }
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether this is the constant polynomial `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Whether this is a single term, returning its parts.
    pub fn as_monomial(&self) -> Option<(&Monomial, &C)> {
        if self.terms.len() == 1 {
            Some((&self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    /// Number of terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    /// Leading (maximal) term, if any.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// All coefficients strictly positive and at least one term present.
    pub fn is_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.iter().all(|(_, c)| c.is_positive())
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = self.terms[i].1.clone();
                    c.add_assign_ref(&other.terms[j].1);
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Self { terms }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Single-term factors keep the sorted order, no re-sorting needed.
        if let Some((m, c)) = other.as_monomial() {
            return Self {
                terms: self
                    .terms
                    .iter()
                    .map(|(tm, tc)| (tm.mul(m), tc.mul_ref(c)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut map: TermMap<C> = TermMap::with_capacity_and_hasher(
            self.terms.len() * other.terms.len(),
            MonomialHasher,
        );
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::accumulate(&mut map, ma.mul(mb), ca.mul_ref(cb));
            }
        }
        Self::from_map(map)
    }

    /// Square, with each symmetric pair of cross terms multiplied once and
    /// doubled at collection time.
    pub fn square(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = self.as_monomial() {
            return Self::term(m.pow(2), c.mul_ref(c));
        }
        let n = self.terms.len();
        let mut map: TermMap<C> =
            TermMap::with_capacity_and_hasher(n * (n + 1) / 2, MonomialHasher);
        for (i, (ma, ca)) in self.terms.iter().enumerate() {
            for (mb, cb) in &self.terms[i + 1..] {
                Self::accumulate(&mut map, ma.mul(mb), ca.mul_ref(cb));
            }
        }
        for v in map.values_mut() {
            let half = v.clone();
            v.add_assign_ref(&half);
        }
        for (m, c) in &self.terms {
            Self::accumulate(&mut map, m.pow(2), c.mul_ref(c));
        }
        Self::from_map(map)
    }

    /// Add one product term into an accumulation map.
    fn accumulate(map: &mut TermMap<C>, m: Monomial, c: C) {
        match map.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Non-negative power by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Per-variable minimum and maximum exponents over the support,
    /// as vectors of length `nvars`.
    fn support_box(&self, nvars: usize) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; nvars];
        let mut hi = vec![i32::MIN; nvars];
        for (m, _) in &self.terms {
            for (i, (l, h)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                let e = m.exp(VarId(i as u32));
                *l = (*l).min(e);
                *h = (*h).max(e);
            }
        }
        (lo, hi)
    }

    fn max_var_len(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.exps.len()).max().unwrap_or(0)
    }

    /// Monomial content: per-variable minimum exponent over the support
    /// (absent variables count as zero).  Returns the trivial monomial for
    /// the zero polynomial.
    pub fn monomial_content(&self) -> Monomial {
        if self.is_zero() {
            return Monomial::one();
        }
        let nv = self.max_var_len();
        let (lo, _) = self.support_box(nv);
        Monomial::from_exps(lo)
    }

    /// Exact division in the Laurent polynomial ring.
    ///
    /// Succeeds if and only if `divisor * q == self` for some Laurent
    /// polynomial `q`, which is then returned.  The algorithm eliminates
    /// leading terms; any candidate quotient term falling outside the exponent
    /// box forced by the two supports proves non-divisibility, which also
    /// bounds the number of iterations.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let nv = self.max_var_len().max(divisor.max_var_len());
        let (alo, ahi) = self.support_box(nv);
        let (blo, bhi) = divisor.support_box(nv);
        // If q * divisor == self, then per variable the extreme exponents add:
        // min(q) = min(self) - min(divisor) and max(q) = max(self) - max(divisor).
        let qlo: Vec<i32> = alo.iter().zip(&blo).map(|(a, b)| a - b).collect();
        let qhi: Vec<i32> = ahi.iter().zip(&bhi).map(|(a, b)| a - b).collect();
        let (lead_m, lead_c) = divisor.leading().expect("nonzero divisor");
        let tail = &divisor.terms[1..];
        let mut rem: Vec<(Monomial, C)> = self.terms.clone();
        let mut q_terms: Vec<(Monomial, C)> = Vec::new();
        while let Some((rm, rc)) = rem.first() {
            let qm = rm.div(lead_m);
            for (i, (lo, hi)) in qlo.iter().zip(&qhi).enumerate() {
                let e = qm.exp(VarId(i as u32));
                if e < *lo || e > *hi {
                    return Err(Error::NotDivisible);
                }
            }
            let qc = rc.exact_div(lead_c).ok_or(Error::NotDivisible)?;
            // rem ← rem − (qm, qc) · divisor.  The product against the
            // divisor's leading term cancels rem's leading term by
            // construction, so both sides start after it; the rest is a merge
            // of two descending streams (multiplying a sorted tail by one
            // monomial preserves its order).
            let mut old = std::mem::take(&mut rem).into_iter();
            old.next();
            let mut prod = tail
                .iter()
                .map(|(dm, dc)| (qm.mul(dm), qc.mul_ref(dc)))
                .peekable();
            rem.reserve(old.len() + tail.len());
            for (m, c) in old {
                loop {
                    match prod.peek() {
                        Some((pm, _)) if *pm > m => {
                            let (pm, pc) = prod.next().expect("peeked");
                            rem.push((pm, -pc));
                        }
                        Some((pm, _)) if *pm == m => {
                            let (_, pc) = prod.next().expect("peeked");
                            let mut c = c;
                            c.sub_assign_ref(&pc);
                            if !c.is_zero() {
                                rem.push((m, c));
                            }
                            break;
                        }
                        _ => {
                            rem.push((m, c));
                            break;
                        }
                    }
                }
            }
            rem.extend(prod.map(|(pm, pc)| (pm, -pc)));
            q_terms.push((qm, qc));
        }
        // Quotient terms are produced in strictly descending order.
        Ok(Self { terms: q_terms })
    }

    /// Substitution homomorphism.
    ///
    /// Each bound variable is replaced by its value; unbound variables pass
    /// through unchanged.  A variable occurring with a negative exponent must
    /// be bound to an invertible value (a single term with unit coefficient
    /// up to ring units), otherwise
    /// [`Error::NonInvertibleSubstitution`] is returned.
    pub fn substitute(
        &self,
        bindings: &HashMap<VarId, LaurentPoly<C>>,
        registry: &VarRegistry,
    ) -> Result<Self> {
        let mut power_cache: HashMap<(VarId, i32), LaurentPoly<C>> = HashMap::new();
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let mut term_val = Self::constant(c.clone());
            let mut passthrough = Monomial::one();
            for (v, e) in m.iter() {
                match bindings.get(&v) {
                    None => {
                        passthrough = passthrough.mul(&Monomial::var(v, e));
                    }
                    Some(val) => {
                        let key = (v, e);
                        let pow = match power_cache.get(&key) {
                            Some(p) => p.clone(),
                            None => {
                                let p = if e >= 0 {
                                    val.pow(e as u32)
                                } else {
                                    let inv = val.invert().ok_or_else(|| {
                                        Error::NonInvertibleSubstitution(
                                            registry.name(v).to_string(),
                                        )
                                    })?;
                                    inv.pow((-e) as u32)
                                };
                                power_cache.insert(key, p.clone());
                                p
                            }
                        };
                        term_val = term_val.mul(&pow);
                    }
                }
            }
            if !passthrough.is_one() {
                term_val = term_val.mul(&Self::term(passthrough, C::one()));
            }
            acc = acc.add(&term_val);
        }
        Ok(acc)
    }

    /// Multiplicative inverse, defined only for invertible elements
    /// (single-term polynomials whose coefficient is a unit).
    pub fn invert(&self) -> Option<Self> {
        let (m, c) = self.as_monomial()?;
        let ci = C::one().exact_div(c)?;
        Some(Self::term(m.pow(-1), ci))
    }

    /// Evaluate at a rational point.  Every variable occurring in the
    /// polynomial must be bound; zero values may not carry negative exponents.
    pub fn eval_rational(
        &self,
        point: &HashMap<VarId, BigRational>,
        registry: &VarRegistry,
    ) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut val = c.to_rational();
            for (v, e) in m.iter() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| Error::UnboundVariable(registry.name(v).to_string()))?;
                if x.is_zero() && e < 0 {
                    return Err(Error::DivisionByZero);
                }
                let p = if e >= 0 {
                    num_traits::pow::Pow::pow(x.clone(), e as u64)
                } else {
                    num_traits::pow::Pow::pow(x.clone(), e as i64)
                };
                val *= p;
            }
            total += val;
        }
        Ok(total)
    }

    /// Canonical text form against a registry (see [`format`][Self::format]
    /// and the module docs for the grammar).
    pub fn format(&self, registry: &VarRegistry) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut s = format!("{c}");
            for (v, e) in m.iter() {
                s.push('*');
                s.push_str(registry.name(v));
                if e != 1 {
                    s.push('^');
                    s.push_str(&e.to_string());
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }

    /// Parse the canonical text form, interning variable names.
    ///
    /// Grammar: `0`, or terms joined by `+`; each term is `*`-separated
    /// factors where a factor is either a coefficient literal or
    /// `name` / `name^exp`.  Whitespace around `+` and `*` is ignored.
    pub fn parse(input: &str, registry: &mut VarRegistry) -> Result<Self> {
        let input = input.trim();
        if input.is_empty() {
            return Err(Error::Parse("empty polynomial".to_string()));
        }
        if input == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for raw_term in input.split('+') {
            let raw_term = raw_term.trim();
            if raw_term.is_empty() {
                return Err(Error::Parse("empty term between '+' separators".to_string()));
            }
            let mut coeff = C::one();
            let mut mono = Monomial::one();
            for factor in raw_term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in term `{raw_term}`")));
                }
                let first = factor.chars().next().unwrap();
                if first.is_ascii_digit() || first == '-' {
                    let c = C::parse_coeff(factor)
                        .ok_or_else(|| Error::Parse(format!("bad coefficient `{factor}`")))?;
                    coeff = coeff * c;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => {
                            let exp: i32 = e.trim().parse().map_err(|_| {
                                Error::Parse(format!("bad exponent `{e}` in `{factor}`"))
                            })?;
                            (n.trim(), exp)
                        }
                        None => (factor, 1),
                    };
                    if name.is_empty()
                        || !name
                            .chars()
                            .all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
                        || name.chars().next().map(|c| c.is_ascii_digit()) == Some(true)
                    {
                        return Err(Error::Parse(format!("bad variable name `{name}`")));
                    }
                    let v = registry.intern(name);
                    mono = mono.mul(&Monomial::var(v, exp));
                }
            }
            terms.push((mono, coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    /// Display with anonymous `v{i}` variable names (registry-independent).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, e) in m.iter() {
                write!(f, "*v{}", v.0)?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
