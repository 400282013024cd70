use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{ElementId, FiniteRing, RingError};

/// An ideal of a finite ring, stored as its sorted element list.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring_id: u64,
    ring_size: usize,
    elements: Vec<ElementId>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring_id == other.ring_id && self.elements == other.elements
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring_id.hash(state);
        self.elements.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ring_id, &self.elements).cmp(&(other.ring_id, &other.elements))
    }
}

impl Ideal {
    fn from_bits(ring: &FiniteRing, bits: &FixedBitSet) -> Ideal {
        Ideal {
            ring_id: ring.id(),
            ring_size: ring.size(),
            elements: bits.ones().map(|i| ElementId(i as u32)).collect(),
        }
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    /// The sorted element list; equal keys mean equal ideals.
    pub fn canonical_key(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.ring_size
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.ring_id == other.ring_id && self.elements.iter().all(|&a| other.contains(a))
    }

    pub fn ring_id(&self) -> u64 {
        self.ring_id
    }

    fn bits(&self) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.ring_size);
        for a in &self.elements {
            b.insert(a.index());
        }
        b
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a.0)?;
        }
        write!(f, "}}")
    }
}

impl FiniteRing {
    fn principal_bits(&self, a: ElementId) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.size());
        for r in self.elements() {
            b.insert(self.mul(r, a).index());
        }
        b
    }

    /// Closure of a set under addition (the set is assumed to contain only
    /// elements whose multiples stay inside the intended ideal).
    fn additive_closure(&self, gens: &FixedBitSet) -> FixedBitSet {
        let mut closure = FixedBitSet::with_capacity(self.size());
        closure.insert(self.zero().index());
        let mut members = vec![self.zero()];
        for g in gens.ones().map(|i| ElementId(i as u32)) {
            if closure.contains(g.index()) {
                continue;
            }
            let mut multiples = Vec::new();
            let mut cur = g;
            while cur != self.zero() {
                multiples.push(cur);
                cur = self.add(cur, g);
            }
            let base = members.clone();
            for &s in &base {
                for &m in &multiples {
                    let e = self.add(s, m);
                    if !closure.contains(e.index()) {
                        closure.insert(e.index());
                        members.push(e);
                    }
                }
            }
        }
        closure
    }

    /// `Ra`, the principal ideal generated by `a`.
    pub fn principal_ideal(&self, a: ElementId) -> Ideal {
        Ideal::from_bits(self, &self.principal_bits(a))
    }

    pub fn zero_ideal(&self) -> Ideal {
        self.principal_ideal(self.zero())
    }

    pub fn whole_ideal(&self) -> Ideal {
        self.principal_ideal(self.one())
    }

    /// All principal ideals other than `{0}` and `R`, ordered by their least
    /// generator.
    pub fn nontrivial_principal_ideals(&self) -> Vec<Ideal> {
        let index = PrincipalIdealIndex::new(self);
        index
            .nontrivial_classes()
            .map(|c| self.principal_ideal(index.representative(c)))
            .collect()
    }

    /// The smallest ideal containing `gens`.
    pub fn ideal_generated(&self, gens: &[ElementId]) -> Ideal {
        let mut prods = FixedBitSet::with_capacity(self.size());
        for &g in gens {
            for r in self.elements() {
                prods.insert(self.mul(r, g).index());
            }
        }
        Ideal::from_bits(self, &self.additive_closure(&prods))
    }

    fn check_owner(&self, i: &Ideal) -> Result<(), RingError> {
        if i.ring_id != self.id() {
            Err(RingError::RingMismatch)
        } else {
            Ok(())
        }
    }

    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Result<Ideal, RingError> {
        self.check_owner(i)?;
        self.check_owner(j)?;
        let mut gens = i.bits();
        gens.union_with(&j.bits());
        Ok(Ideal::from_bits(self, &self.additive_closure(&gens)))
    }

    /// `IJ`, generated by all products `ab` with `a ∈ I`, `b ∈ J`.
    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Result<Ideal, RingError> {
        self.check_owner(i)?;
        self.check_owner(j)?;
        let mut prods = FixedBitSet::with_capacity(self.size());
        for &a in &i.elements {
            for &b in &j.elements {
                prods.insert(self.mul(a, b).index());
            }
        }
        Ok(Ideal::from_bits(self, &self.additive_closure(&prods)))
    }

    /// Least `n` with `I^n = 0`; `None` when the powers stabilise at a
    /// nonzero ideal.
    pub fn nilpotent_index(&self, i: &Ideal) -> Result<Option<u32>, RingError> {
        self.check_owner(i)?;
        let mut power = i.clone();
        let mut n = 1u32;
        loop {
            if power.is_zero() {
                return Ok(Some(n));
            }
            let next = self.ideal_product(&power, i)?;
            if next == power {
                return Ok(None);
            }
            power = next;
            n += 1;
        }
    }

    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// All maximal ideals. Products use the factors' maximal ideals; base
    /// rings use the primitive idempotents `e`, with
    /// `M_e = {x : e ∉ R·x·e}`.
    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        if let Some(factors) = self.factors() {
            let mut out = Vec::new();
            for (i, f) in factors.iter().enumerate() {
                for m in f.maximal_ideals() {
                    let mut bits = FixedBitSet::with_capacity(self.size());
                    for x in self.elements() {
                        let comps = self.components(x).unwrap();
                        if m.contains(comps[i]) {
                            bits.insert(x.index());
                        }
                    }
                    out.push(Ideal::from_bits(self, &bits));
                }
            }
            out.sort();
            return out;
        }
        let idem = self.idempotents();
        let primitive: Vec<ElementId> = idem
            .iter()
            .copied()
            .filter(|&e| e != self.zero())
            .filter(|&e| !idem.iter().any(|&f| f != self.zero() && f != e && self.mul(f, e) == f))
            .collect();
        let mut out: Vec<Ideal> = primitive
            .into_iter()
            .map(|e| {
                let mut bits = FixedBitSet::with_capacity(self.size());
                for x in self.elements() {
                    let xe = self.mul(x, e);
                    if !self.elements().any(|y| self.mul(xe, y) == e) {
                        bits.insert(x.index());
                    }
                }
                Ideal::from_bits(self, &bits)
            })
            .collect();
        out.sort();
        out
    }

    /// The unique maximal ideal if the ring is local.
    pub fn local_maximal_ideal(&self) -> Option<Ideal> {
        let mut m = self.maximal_ideals();
        if m.len() == 1 {
            m.pop()
        } else {
            None
        }
    }

    pub fn is_local(&self) -> bool {
        self.local_maximal_ideal().is_some()
    }

    /// Every ideal, found by closing `{0}` under adding principal ideals.
    /// The count grows quickly; meant for small rings.
    pub fn all_ideals(&self) -> Vec<Ideal> {
        let zero = self.zero_ideal();
        let mut seen: HashMap<Vec<ElementId>, Ideal> = HashMap::new();
        seen.insert(zero.elements.clone(), zero.clone());
        let mut frontier = vec![zero];
        let principals: Vec<FixedBitSet> = self.elements().map(|a| self.principal_bits(a)).collect();
        while let Some(i) = frontier.pop() {
            let ib = i.bits();
            for (a, pa) in principals.iter().enumerate() {
                if ib.contains(a) {
                    continue;
                }
                let mut gens = ib.clone();
                gens.union_with(pa);
                let j = Ideal::from_bits(self, &self.additive_closure(&gens));
                if !seen.contains_key(&j.elements) {
                    seen.insert(j.elements.clone(), j.clone());
                    frontier.push(j);
                }
            }
        }
        let mut out: Vec<Ideal> = seen.into_values().collect();
        out.sort();
        out
    }
}

/// Principal ideals of a ring grouped into classes, with the containment
/// order between classes. Classes are numbered by their least generator.
#[derive(Clone, Debug)]
pub struct PrincipalIdealIndex {
    class_of: Vec<u32>,
    reps: Vec<ElementId>,
    /// `contains[c]` has bit `d` set iff ideal `c` contains ideal `d`.
    contains: Vec<FixedBitSet>,
    zero_class: u32,
    whole_class: u32,
}

impl PrincipalIdealIndex {
    pub fn new(ring: &FiniteRing) -> Self {
        match ring.factors() {
            Some(factors) => Self::for_product(ring, factors),
            None => Self::direct(ring),
        }
    }

    fn direct(ring: &FiniteRing) -> Self {
        let mut class_of = Vec::with_capacity(ring.size());
        let mut reps = Vec::new();
        let mut ideals: Vec<FixedBitSet> = Vec::new();
        let mut lookup: HashMap<Vec<u32>, u32> = HashMap::new();
        for a in ring.elements() {
            let bits = ring.principal_bits(a);
            let key: Vec<u32> = bits.ones().map(|i| i as u32).collect();
            let c = *lookup.entry(key).or_insert_with(|| {
                reps.push(a);
                ideals.push(bits);
                (reps.len() - 1) as u32
            });
            class_of.push(c);
        }
        let k = reps.len();
        let contains = (0..k)
            .map(|c| {
                let mut row = FixedBitSet::with_capacity(k);
                for d in 0..k {
                    if ideals[c].contains(reps[d].index()) {
                        row.insert(d);
                    }
                }
                row
            })
            .collect();
        let zero_class = class_of[ring.zero().index()];
        let whole_class = class_of[ring.one().index()];
        PrincipalIdealIndex {
            class_of,
            reps,
            contains,
            zero_class,
            whole_class,
        }
    }

    fn for_product(ring: &FiniteRing, factors: &[FiniteRing]) -> Self {
        let sub: Vec<PrincipalIdealIndex> = factors.iter().map(PrincipalIdealIndex::new).collect();
        let mut class_of = Vec::with_capacity(ring.size());
        let mut reps = Vec::new();
        let mut tuples: Vec<Vec<u32>> = Vec::new();
        let mut lookup: HashMap<Vec<u32>, u32> = HashMap::new();
        for a in ring.elements() {
            let comps = ring.components(a).unwrap();
            let key: Vec<u32> = comps.iter().zip(&sub).map(|(c, s)| s.class_of[c.index()]).collect();
            let c = *lookup.entry(key.clone()).or_insert_with(|| {
                reps.push(a);
                tuples.push(key);
                (reps.len() - 1) as u32
            });
            class_of.push(c);
        }
        let k = reps.len();
        let contains = (0..k)
            .map(|c| {
                let mut row = FixedBitSet::with_capacity(k);
                for d in 0..k {
                    let all = tuples[c]
                        .iter()
                        .zip(&tuples[d])
                        .zip(&sub)
                        .all(|((&x, &y), s)| s.contains[x as usize].contains(y as usize));
                    if all {
                        row.insert(d);
                    }
                }
                row
            })
            .collect();
        let zero_class = class_of[ring.zero().index()];
        let whole_class = class_of[ring.one().index()];
        PrincipalIdealIndex {
            class_of,
            reps,
            contains,
            zero_class,
            whole_class,
        }
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of(&self, a: ElementId) -> u32 {
        self.class_of[a.index()]
    }

    /// Least generator of the class.
    pub fn representative(&self, class: u32) -> ElementId {
        self.reps[class as usize]
    }

    pub fn zero_class(&self) -> u32 {
        self.zero_class
    }

    pub fn whole_class(&self) -> u32 {
        self.whole_class
    }

    pub fn is_trivial(&self, class: u32) -> bool {
        class == self.zero_class || class == self.whole_class
    }

    pub fn nontrivial_classes(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.reps.len() as u32).filter(|&c| !self.is_trivial(c))
    }

    /// Whether ideal `c` contains ideal `d`.
    pub fn class_contains(&self, c: u32, d: u32) -> bool {
        self.contains[c as usize].contains(d as usize)
    }

    pub fn comparable(&self, c: u32, d: u32) -> bool {
        self.class_contains(c, d) || self.class_contains(d, c)
    }
}
