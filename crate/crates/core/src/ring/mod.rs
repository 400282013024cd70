//! Finite commutative rings with unity, stored as operation tables.
//!
//! Base rings (`Z_n`, Galois fields, polynomial quotients) carry dense
//! addition and multiplication tables. Direct products keep their factors and
//! evaluate componentwise over the factor tables, with elements numbered in
//! mixed radix (first factor most significant).

mod catalog;
mod ideal;
mod notation;
pub(crate) mod poly;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use catalog::{catalog, describe_local, CompletenessTier, LocalRingDescriptor};
pub use ideal::{Ideal, PrincipalIdealIndex};
pub use notation::parse_ring_notation;

/// Largest base ring that gets dense tables.
pub const BASE_SIZE_CAP: usize = 256;
/// Largest direct product that may be built.
pub const PRODUCT_SIZE_CAP: usize = 16384;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("invalid ring order {0}: must be at least 2")]
    InvalidOrder(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("ring of {size} elements exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),
    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("ring is not local")]
    NotLocal,
    #[error("cannot parse ring notation \"{input}\": {reason}")]
    Notation { input: String, reason: String },
}

/// Index of an element in its ring's element list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Construction recipe of a ring; also the JSON ring descriptor format.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingSpec {
    Zn {
        n: u32,
    },
    Gf {
        p: u32,
        k: u32,
    },
    Quotient {
        p: u32,
        n: u32,
        vars: Vec<String>,
        relations: Vec<String>,
    },
    Product {
        parts: Vec<RingSpec>,
    },
}

impl RingSpec {
    pub fn build(&self) -> Result<FiniteRing, RingError> {
        match self {
            RingSpec::Zn { n } => build_zn(*n),
            RingSpec::Gf { p, k } => build_gf(*p, *k),
            RingSpec::Quotient { p, n, vars, relations } => {
                let rels: Vec<&str> = relations.iter().map(String::as_str).collect();
                let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
                build_quotient_ring(*p, *n, &vars, &rels)
            }
            RingSpec::Product { parts } => {
                let rings = parts.iter().map(RingSpec::build).collect::<Result<Vec<_>, _>>()?;
                direct_product(&rings)
            }
        }
    }

    /// Normal form used for ring identity: prime fields become `Z_p`,
    /// relations are re-rendered and sorted.
    pub fn canonical(&self) -> Result<RingSpec, RingError> {
        Ok(match self {
            RingSpec::Gf { p, k: 1 } => RingSpec::Zn { n: *p },
            RingSpec::Quotient { p, n, vars, relations } => {
                let mut rels = Vec::new();
                for r in relations {
                    let poly = poly::parse_poly(r, vars, *n).map_err(|e| RingError::InvalidParameter(e))?;
                    if !poly.is_zero() {
                        rels.push(poly.render(vars));
                    }
                }
                rels.sort();
                rels.dedup();
                RingSpec::Quotient {
                    p: *p,
                    n: *n,
                    vars: vars.clone(),
                    relations: rels,
                }
            }
            RingSpec::Product { parts } => RingSpec::Product {
                parts: parts.iter().map(RingSpec::canonical).collect::<Result<_, _>>()?,
            },
            other => other.clone(),
        })
    }

    /// Display name in the inline notation accepted by [`parse_ring_notation`].
    pub fn name(&self) -> String {
        match self {
            RingSpec::Zn { n } => format!("Z{n}"),
            RingSpec::Gf { p, k } => {
                if *k == 1 {
                    format!("Z{p}")
                } else {
                    format!("F{}", u64::from(*p).pow(*k))
                }
            }
            RingSpec::Quotient { n, vars, relations, .. } => {
                format!("Z{n}[{}]/({})", vars.join(","), relations.join(","))
            }
            RingSpec::Product { parts } => parts.iter().map(RingSpec::name).collect::<Vec<_>>().join(" x "),
        }
    }
}

enum Repr {
    Table {
        add: Vec<u16>,
        mul: Vec<u16>,
    },
    Product {
        factors: Vec<FiniteRing>,
        strides: Vec<usize>,
    },
}

struct RingInner {
    id: u64,
    spec: RingSpec,
    name: String,
    size: usize,
    labels: Vec<String>,
    one: ElementId,
    repr: Repr,
}

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// A finite commutative ring with unity. Cloning is cheap and preserves
/// identity; rings are immutable and shareable across threads.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.inner.name)
            .field("size", &self.inner.size)
            .finish()
    }
}

impl FiniteRing {
    fn from_tables(spec: RingSpec, labels: Vec<String>, add: Vec<u16>, mul: Vec<u16>) -> Self {
        let size = labels.len();
        debug_assert_eq!(add.len(), size * size);
        let name = spec.name();
        FiniteRing {
            inner: Arc::new(RingInner {
                id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
                spec,
                name,
                size,
                labels,
                one: ElementId(1),
                repr: Repr::Table { add, mul },
            }),
        }
    }

    /// Unique identity of this ring value (shared by clones).
    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn spec(&self) -> &RingSpec {
        &self.inner.spec
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn zero(&self) -> ElementId {
        ElementId(0)
    }

    pub fn one(&self) -> ElementId {
        self.inner.one
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.inner.size as u32).map(ElementId)
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.inner.labels[a.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<ElementId> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.inner
            .labels
            .iter()
            .position(|l| *l == wanted)
            .map(|i| ElementId(i as u32))
    }

    /// Factors of a direct product, `None` for base rings.
    pub fn factors(&self) -> Option<&[FiniteRing]> {
        match &self.inner.repr {
            Repr::Product { factors, .. } => Some(factors),
            Repr::Table { .. } => None,
        }
    }

    /// Component elements of `a` in a direct product.
    pub fn components(&self, a: ElementId) -> Option<Vec<ElementId>> {
        match &self.inner.repr {
            Repr::Product { factors, strides } => Some(
                factors
                    .iter()
                    .zip(strides)
                    .map(|(f, &s)| ElementId(((a.index() / s) % f.size()) as u32))
                    .collect(),
            ),
            Repr::Table { .. } => None,
        }
    }

    /// Element of a direct product with the given components.
    pub fn from_components(&self, comps: &[ElementId]) -> Option<ElementId> {
        match &self.inner.repr {
            Repr::Product { factors, strides } if comps.len() == factors.len() => {
                let mut idx = 0usize;
                for ((c, f), &s) in comps.iter().zip(factors).zip(strides) {
                    if c.index() >= f.size() {
                        return None;
                    }
                    idx += c.index() * s;
                }
                Some(ElementId(idx as u32))
            }
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.inner.repr {
            Repr::Table { add, .. } => ElementId(u32::from(add[a.index() * self.inner.size + b.index()])),
            Repr::Product { factors, strides } => self.componentwise(factors, strides, a, b, |f, x, y| f.add(x, y)),
        }
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.inner.repr {
            Repr::Table { mul, .. } => ElementId(u32::from(mul[a.index() * self.inner.size + b.index()])),
            Repr::Product { factors, strides } => self.componentwise(factors, strides, a, b, |f, x, y| f.mul(x, y)),
        }
    }

    fn componentwise(
        &self,
        factors: &[FiniteRing],
        strides: &[usize],
        a: ElementId,
        b: ElementId,
        op: impl Fn(&FiniteRing, ElementId, ElementId) -> ElementId,
    ) -> ElementId {
        let mut idx = 0usize;
        for (f, &s) in factors.iter().zip(strides) {
            let x = ElementId(((a.index() / s) % f.size()) as u32);
            let y = ElementId(((b.index() / s) % f.size()) as u32);
            idx += op(f, x, y).index() * s;
        }
        ElementId(idx as u32)
    }

    pub fn neg(&self, a: ElementId) -> ElementId {
        self.elements()
            .find(|&b| self.add(a, b) == self.zero())
            .expect("every element has an additive inverse")
    }

    pub fn is_unit(&self, a: ElementId) -> bool {
        match self.components(a) {
            Some(comps) => {
                let factors = self.factors().unwrap();
                comps.iter().zip(factors).all(|(&c, f)| f.is_unit(c))
            }
            None => self.elements().any(|b| self.mul(a, b) == self.one()),
        }
    }

    /// The unit group `U(R)`.
    pub fn units(&self) -> Vec<ElementId> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    /// Checks the commutative ring axioms. Exhaustive up to
    /// [`BASE_SIZE_CAP`] elements; above that, associativity and
    /// distributivity are sampled on `100_000` random triples.
    pub fn check_axioms(&self) -> Result<(), RingError> {
        let n = self.size();
        let (zero, one) = (self.zero(), self.one());
        if zero == one {
            return Err(RingError::AxiomViolation("zero equals one".into()));
        }
        for a in self.elements() {
            if self.add(a, zero) != a {
                return Err(RingError::AxiomViolation(format!("{} + 0", self.label(a))));
            }
            if self.mul(a, one) != a {
                return Err(RingError::AxiomViolation(format!("{} * 1", self.label(a))));
            }
            if !self.elements().any(|b| self.add(a, b) == zero) {
                return Err(RingError::AxiomViolation(format!("no inverse of {}", self.label(a))));
            }
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(RingError::AxiomViolation(format!(
                        "commutativity at ({}, {})",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        let check = |a: ElementId, b: ElementId, c: ElementId| -> Result<(), RingError> {
            let fail = |what: &str| {
                RingError::AxiomViolation(format!(
                    "{what} at ({}, {}, {})",
                    self.label(a),
                    self.label(b),
                    self.label(c)
                ))
            };
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Err(fail("additive associativity"));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(fail("multiplicative associativity"));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Err(fail("distributivity"));
            }
            Ok(())
        };
        if n <= BASE_SIZE_CAP {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..100_000 {
                let a = ElementId(rng.random_range(0..n as u32));
                let b = ElementId(rng.random_range(0..n as u32));
                let c = ElementId(rng.random_range(0..n as u32));
                check(a, b, c)?;
            }
        }
        Ok(())
    }
}

/// The ring of integers modulo `n`.
pub fn build_zn(n: u32) -> Result<FiniteRing, RingError> {
    if n < 2 {
        return Err(RingError::InvalidOrder(u64::from(n)));
    }
    let size = n as usize;
    if size > BASE_SIZE_CAP {
        return Err(RingError::TooLarge {
            size,
            cap: BASE_SIZE_CAP,
        });
    }
    let mut add = vec![0u16; size * size];
    let mut mul = vec![0u16; size * size];
    for a in 0..size {
        for b in 0..size {
            add[a * size + b] = ((a + b) % size) as u16;
            mul[a * size + b] = ((a * b) % size) as u16;
        }
    }
    let labels = (0..size).map(|a| a.to_string()).collect();
    Ok(FiniteRing::from_tables(RingSpec::Zn { n }, labels, add, mul))
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// The field of order `p^k`, as `Z_p[x]` modulo the lexicographically smallest
/// monic irreducible of degree `k`.
pub fn build_gf(p: u32, k: u32) -> Result<FiniteRing, RingError> {
    if !is_prime(p) {
        return Err(RingError::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(RingError::InvalidParameter("degree must be at least 1".into()));
    }
    let order = u64::from(p).checked_pow(k).unwrap_or(u64::MAX);
    if order > BASE_SIZE_CAP as u64 {
        return Err(RingError::TooLarge {
            size: order.min(usize::MAX as u64) as usize,
            cap: BASE_SIZE_CAP,
        });
    }
    if k == 1 {
        let z = build_zn(p)?;
        let Repr::Table { add, mul } = &z.inner.repr else {
            unreachable!()
        };
        return Ok(FiniteRing::from_tables(
            RingSpec::Gf { p, k },
            z.labels().to_vec(),
            add.clone(),
            mul.clone(),
        ));
    }
    let modulus = poly::smallest_irreducible(p, k);
    let rel = poly::Poly::from_dense(p, &modulus);
    let vars = vec!["x".to_string()];
    let t = poly::quotient_tables(p, &vars, &[rel], BASE_SIZE_CAP)?;
    Ok(FiniteRing::from_tables(RingSpec::Gf { p, k }, t.labels, t.add, t.mul))
}

/// `Z_n[vars]/(relations)` where `n` is a power of the prime `p`.
///
/// Relations act as rewrite rules on their graded-lex leading terms; the
/// residues reachable from `1` and the variables are closed under addition and
/// tabulated. Presentations whose normal forms are not closed, or whose
/// tables fail the ring axioms, are rejected as unsupported.
pub fn build_quotient_ring(p: u32, n: u32, vars: &[&str], relations: &[&str]) -> Result<FiniteRing, RingError> {
    if !is_prime(p) {
        return Err(RingError::InvalidParameter(format!("{p} is not prime")));
    }
    let mut q = n;
    while q > 1 && q % p == 0 {
        q /= p;
    }
    if n < 2 || q != 1 {
        return Err(RingError::InvalidParameter(format!("{n} is not a power of {p}")));
    }
    if vars.is_empty() {
        return Err(RingError::InvalidParameter("at least one variable is required".into()));
    }
    let vars: Vec<String> = vars.iter().map(|v| v.trim().to_string()).collect();
    let mut rels = Vec::new();
    for r in relations {
        let poly = poly::parse_poly(r, &vars, n).map_err(RingError::InvalidParameter)?;
        rels.push(poly);
    }
    let t = poly::quotient_tables(n, &vars, &rels, BASE_SIZE_CAP)?;
    let spec = RingSpec::Quotient {
        p,
        n,
        vars: vars.clone(),
        relations: rels.iter().filter(|r| !r.is_zero()).map(|r| r.render(&vars)).collect(),
    };
    let ring = FiniteRing::from_tables(spec, t.labels, t.add, t.mul);
    ring.check_axioms()
        .map_err(|e| RingError::UnsupportedPresentation(e.to_string()))?;
    Ok(ring)
}

/// Direct product with componentwise operations.
pub fn direct_product(parts: &[FiniteRing]) -> Result<FiniteRing, RingError> {
    if parts.is_empty() {
        return Err(RingError::InvalidParameter(
            "a product needs at least one factor".into(),
        ));
    }
    let mut size: usize = 1;
    for p in parts {
        size = size.saturating_mul(p.size());
    }
    if size > PRODUCT_SIZE_CAP {
        return Err(RingError::TooLarge {
            size,
            cap: PRODUCT_SIZE_CAP,
        });
    }
    let mut strides = vec![1usize; parts.len()];
    for i in (0..parts.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * parts[i + 1].size();
    }
    let mut labels = Vec::with_capacity(size);
    for idx in 0..size {
        let comps: Vec<&str> = parts
            .iter()
            .zip(&strides)
            .map(|(f, &s)| f.label(ElementId(((idx / s) % f.size()) as u32)))
            .collect();
        labels.push(format!("({})", comps.join(",")));
    }
    let one: usize = parts.iter().zip(&strides).map(|(f, &s)| f.one().index() * s).sum();
    let spec = RingSpec::Product {
        parts: parts.iter().map(|p| p.spec().clone()).collect(),
    };
    let name = spec.name();
    Ok(FiniteRing {
        inner: Arc::new(RingInner {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            spec,
            name,
            size,
            labels,
            one: ElementId(one as u32),
            repr: Repr::Product {
                factors: parts.to_vec(),
                strides,
            },
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[u32]) -> Vec<ElementId> {
        v.iter().map(|&i| ElementId(i)).collect()
    }

    #[test]
    fn zn_basics() {
        let z2 = build_zn(2).unwrap();
        assert_eq!(z2.size(), 2);
        assert_eq!((z2.zero(), z2.one()), (ElementId(0), ElementId(1)));
        let z4 = build_zn(4).unwrap();
        assert_eq!(z4.mul(ElementId(2), ElementId(2)), ElementId(0));
        assert_eq!(z4.mul(ElementId(2), ElementId(3)), ElementId(2));
        assert_eq!(z4.units(), ids(&[1, 3]));
        assert_eq!(build_zn(6).unwrap().units(), ids(&[1, 5]));
        assert_eq!(build_zn(1).unwrap_err(), RingError::InvalidOrder(1));
        assert_eq!(build_zn(0).unwrap_err(), RingError::InvalidOrder(0));
    }

    #[test]
    fn gf_basics() {
        let f2 = build_gf(2, 1).unwrap();
        let z2 = build_zn(2).unwrap();
        for a in f2.elements() {
            for b in f2.elements() {
                assert_eq!(f2.add(a, b), z2.add(a, b));
                assert_eq!(f2.mul(a, b), z2.mul(a, b));
            }
        }
        let f4 = build_gf(2, 2).unwrap();
        assert_eq!(f4.size(), 4);
        assert_eq!(f4.units().len(), 3);
        assert!(matches!(build_gf(4, 1), Err(RingError::InvalidParameter(_))));
        assert!(matches!(build_gf(2, 9), Err(RingError::TooLarge { .. })));
        assert!(build_gf(2, 4).is_ok());
    }

    #[test]
    fn gf9_multiplicative_group_is_cyclic_of_order_8() {
        let f9 = build_gf(3, 2).unwrap();
        assert_eq!(f9.size(), 9);
        let order = |a: ElementId| {
            let mut k = 1;
            let mut x = a;
            while x != f9.one() {
                x = f9.mul(x, a);
                k += 1;
            }
            k
        };
        let orders: Vec<u32> = f9.units().into_iter().map(order).collect();
        assert_eq!(orders.len(), 8);
        assert!(orders.contains(&8));
        assert!(orders.iter().all(|o| 8 % o == 0));
    }

    #[test]
    fn quotient_examples() {
        let r = build_quotient_ring(2, 2, &["x"], &["x^2"]).unwrap();
        assert_eq!(r.labels(), &["0", "1", "x", "1+x"]);
        let x = r.element_by_label("x").unwrap();
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(r.units(), vec![r.one(), r.element_by_label("1+x").unwrap()]);

        let r7 = build_quotient_ring(2, 2, &["x"], &["x^7"]).unwrap();
        assert_eq!(r7.size(), 128);

        let r8 = build_quotient_ring(2, 2, &["x", "y"], &["x^2", "x*y", "y^2"]).unwrap();
        assert_eq!(r8.size(), 8);

        let z4x = build_quotient_ring(2, 4, &["x"], &["2x", "x^2-2"]).unwrap();
        assert_eq!(z4x.size(), 8);
        let x = z4x.element_by_label("x").unwrap();
        assert_eq!(z4x.label(z4x.mul(x, x)), "2");

        assert!(matches!(
            build_quotient_ring(2, 2, &["x", "y"], &["x^2"]),
            Err(RingError::UnsupportedPresentation(_)) | Err(RingError::TooLarge { .. })
        ));
        assert!(matches!(
            build_quotient_ring(2, 6, &["x"], &["x^2"]),
            Err(RingError::InvalidParameter(_))
        ));
    }

    #[test]
    fn products() {
        let z2 = build_zn(2).unwrap();
        let z4 = build_zn(4).unwrap();
        let p = direct_product(&[z2.clone(), z2.clone()]).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.units(), vec![p.one()]);
        assert_eq!(p.label(p.one()), "(1,1)");
        let q = direct_product(&[z4.clone(), z4]).unwrap();
        assert_eq!(q.units().len(), 4);
        let f4 = build_gf(2, 2).unwrap();
        let f8 = build_gf(2, 3).unwrap();
        assert_eq!(direct_product(&[f4, f8]).unwrap().units().len(), 21);
        let z11 = build_zn(11).unwrap();
        let z4 = build_zn(4).unwrap();
        assert_eq!(direct_product(&[z4, z11]).unwrap().units().len(), 20);
        assert!(direct_product(&[]).is_err());
        let big = build_zn(256).unwrap();
        assert!(matches!(
            direct_product(&[big.clone(), big]),
            Err(RingError::TooLarge { .. })
        ));
    }

    #[test]
    fn components_round_trip() {
        let r = direct_product(&[build_zn(3).unwrap(), build_zn(4).unwrap()]).unwrap();
        for a in r.elements() {
            let c = r.components(a).unwrap();
            assert_eq!(r.from_components(&c), Some(a));
        }
    }

    #[test]
    fn axioms_hold_for_builders() {
        for spec in [
            RingSpec::Zn { n: 12 },
            RingSpec::Gf { p: 2, k: 3 },
            RingSpec::Gf { p: 3, k: 2 },
            RingSpec::Product {
                parts: vec![RingSpec::Zn { n: 4 }, RingSpec::Gf { p: 2, k: 2 }],
            },
        ] {
            spec.build().unwrap().check_axioms().unwrap();
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = RingSpec::Product {
            parts: vec![
                RingSpec::Quotient {
                    p: 2,
                    n: 2,
                    vars: vec!["x".into()],
                    relations: vec!["x^7".into()],
                },
                RingSpec::Zn { n: 2 },
            ],
        };
        let text = serde_json::to_string(&spec).unwrap();
        assert!(text.contains("\"kind\":\"product\""));
        let back: RingSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
        let r = back.build().unwrap();
        assert_eq!(r.size(), 256);
        let labels = r.labels().to_vec();
        let again = back.build().unwrap();
        assert_eq!(again.labels(), &labels[..]);
    }
}
