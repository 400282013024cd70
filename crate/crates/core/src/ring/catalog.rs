use serde::Serialize;

use super::{FiniteRing, Ideal, RingError, RingSpec, BASE_SIZE_CAP};

/// How much of the local-ring classification a catalog order covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompletenessTier {
    /// Every local ring of this order (up to isomorphism) is listed.
    CompleteForOrder,
    /// Only chain rings and fields are listed.
    Partial,
}

/// A local ring with its maximal ideal and nilpotent index.
#[derive(Clone, Debug)]
pub struct LocalRingDescriptor {
    pub name: String,
    pub spec: RingSpec,
    pub order: usize,
    pub ring: FiniteRing,
    pub maximal_ideal: Ideal,
    pub eta: u32,
    pub maximal_is_principal: bool,
    pub tier: CompletenessTier,
}

impl LocalRingDescriptor {
    pub fn is_field(&self) -> bool {
        self.maximal_ideal.is_zero()
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

fn tier_for(order: usize) -> CompletenessTier {
    let complete = order <= 9 || prime_power(order as u32).is_some_and(|(_, k)| k <= 2);
    if complete {
        CompletenessTier::CompleteForOrder
    } else {
        CompletenessTier::Partial
    }
}

fn chain_quotient(p: u32, k: u32) -> RingSpec {
    RingSpec::Quotient {
        p,
        n: p,
        vars: vec!["x".into()],
        relations: vec![format!("x^{k}")],
    }
}

/// The order-8 local rings that are not chain rings, with display names.
fn order8_extras() -> Vec<(String, RingSpec)> {
    vec![
        (
            "Z4[x]/(2x,x^2-2)".into(),
            RingSpec::Quotient {
                p: 2,
                n: 4,
                vars: vec!["x".into()],
                relations: vec!["2x".into(), "x^2-2".into()],
            },
        ),
        (
            "Z4[x]/(2,x)^2".into(),
            RingSpec::Quotient {
                p: 2,
                n: 4,
                vars: vec!["x".into()],
                relations: vec!["2x".into(), "x^2".into()],
            },
        ),
        (
            "Z2[x,y]/(x,y)^2".into(),
            RingSpec::Quotient {
                p: 2,
                n: 2,
                vars: vec!["x".into(), "y".into()],
                relations: vec!["x^2".into(), "xy".into(), "y^2".into()],
            },
        ),
    ]
}

/// Names and recipes of the catalog rings up to `max_order`, without
/// building them. Ordered by order, then fields, `Z_{p^k}`, `Z_p[x]/(x^k)`,
/// and the remaining order-8 rings.
pub(crate) fn catalog_recipes(max_order: usize) -> Vec<(String, RingSpec)> {
    let max = max_order.min(BASE_SIZE_CAP) as u32;
    let mut out = Vec::new();
    for q in 2..=max {
        let Some((p, k)) = prime_power(q) else { continue };
        if k == 1 {
            out.push((format!("Z{q}"), RingSpec::Zn { n: q }));
            continue;
        }
        out.push((format!("F{q}"), RingSpec::Gf { p, k }));
        out.push((format!("Z{q}"), RingSpec::Zn { n: q }));
        out.push((format!("Z{p}[x]/(x^{k})"), chain_quotient(p, k)));
        if q == 8 {
            out.extend(order8_extras());
        }
    }
    out
}

/// Catalog name of a ring recipe, if it is a catalog ring.
pub(crate) fn catalog_name(spec: &RingSpec) -> Option<String> {
    let canon = spec.canonical().ok()?;
    let order = match &canon {
        RingSpec::Zn { n } => *n as usize,
        RingSpec::Gf { p, k } => (*p as usize).pow(*k),
        RingSpec::Quotient { .. } => BASE_SIZE_CAP,
        RingSpec::Product { .. } => return None,
    };
    catalog_recipes(order)
        .into_iter()
        .find(|(_, s)| s.canonical().ok().as_ref() == Some(&canon))
        .map(|(name, _)| name)
}

/// Describes a local ring: maximal ideal, its nilpotent index and whether it
/// is principal.
pub fn describe_local(ring: &FiniteRing) -> Result<LocalRingDescriptor, RingError> {
    let m = ring.local_maximal_ideal().ok_or(RingError::NotLocal)?;
    let eta = ring
        .nilpotent_index(&m)?
        .ok_or_else(|| RingError::AxiomViolation("maximal ideal of a local ring is not nilpotent".into()))?;
    let maximal_is_principal = m.elements().iter().any(|&a| ring.principal_ideal(a) == m);
    let name = catalog_name(ring.spec()).unwrap_or_else(|| ring.name().to_string());
    Ok(LocalRingDescriptor {
        name,
        spec: ring.spec().clone(),
        order: ring.size(),
        ring: ring.clone(),
        maximal_ideal: m,
        eta,
        maximal_is_principal,
        tier: tier_for(ring.size()),
    })
}

/// Local rings up to `max_order` (capped at the base ring size limit):
/// every field and chain ring `Z_{p^k}`, `Z_p[x]/(x^k)`, plus the three
/// non-chain local rings of order 8.
pub fn catalog(max_order: usize) -> Result<Vec<LocalRingDescriptor>, RingError> {
    if max_order < 2 {
        return Err(RingError::InvalidOrder(max_order as u64));
    }
    catalog_recipes(max_order)
        .into_iter()
        .map(|(name, spec)| {
            let ring = spec.build()?;
            let mut d = describe_local(&ring)?;
            d.name = name;
            Ok(d)
        })
        .collect()
}
