//! Multivariate polynomials over `Z_n` and the closure construction of finite
//! quotient rings `Z_n[vars]/(relations)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use super::RingError;

/// Exponent vector, compared in graded lexicographic order (total degree
/// first, then lexicographically with the first variable most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Mono(pub(crate) Vec<u16>);

impl Mono {
    pub(crate) fn one(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Mono(e)
    }

    fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, divisor: &Mono) -> Mono {
        Mono(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with coefficients reduced into `0..modulus`; zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Poly {
    modulus: u32,
    nvars: usize,
    terms: BTreeMap<Mono, u32>,
}

impl Poly {
    pub(crate) fn zero(modulus: u32, nvars: usize) -> Self {
        Poly {
            modulus,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn constant(modulus: u32, nvars: usize, c: u64) -> Self {
        Self::monomial(modulus, Mono::one(nvars), c)
    }

    fn monomial(modulus: u32, mono: Mono, c: u64) -> Self {
        let nvars = mono.0.len();
        let mut p = Poly::zero(modulus, nvars);
        p.add_term(mono, c);
        p
    }

    pub(crate) fn var(modulus: u32, nvars: usize, i: usize) -> Self {
        Self::monomial(modulus, Mono::var(nvars, i), 1)
    }

    /// Dense univariate polynomial, coefficients low to high degree.
    pub(crate) fn from_dense(modulus: u32, coeffs: &[u32]) -> Self {
        let mut p = Poly::zero(modulus, 1);
        for (d, &c) in coeffs.iter().enumerate() {
            p.add_term(Mono(vec![d as u16]), u64::from(c));
        }
        p
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: Mono, c: u64) {
        let m = u64::from(self.modulus);
        let c = c % m;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c as u32);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = (u64::from(*o.get()) + c) % m;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s as u32;
                }
            }
        }
    }

    pub(crate) fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), u64::from(c));
        }
        out
    }

    pub(crate) fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.modulus, self.nvars);
        for (m, &c) in &self.terms {
            out.add_term(m.clone(), u64::from(self.modulus - c));
        }
        out
    }

    pub(crate) fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub(crate) fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.modulus, self.nvars);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.add_term(ma.mul(mb), u64::from(ca) * u64::from(cb));
            }
        }
        out
    }

    fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::constant(self.modulus, self.nvars, 1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    fn mul_term(&self, mono: &Mono, c: u64) -> Poly {
        let mut out = Poly::zero(self.modulus, self.nvars);
        for (m, &a) in &self.terms {
            out.add_term(m.mul(mono), u64::from(a) * c);
        }
        out
    }

    fn leading(&self) -> Option<(&Mono, u32)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    /// Renders the polynomial with the given variable names, lowest term first.
    pub(crate) fn render(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, &c) in &self.terms {
            let mut mono = String::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                mono.push_str(&vars[i]);
                if e > 1 {
                    mono.push('^');
                    mono.push_str(&e.to_string());
                }
            }
            if mono.is_empty() {
                parts.push(c.to_string());
            } else if c == 1 {
                parts.push(mono);
            } else {
                parts.push(format!("{c}{mono}"));
            }
        }
        parts.join("+")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i64) as u64)
}

/// A relation used as a rewrite rule: its leading term `c·m` rewrites any
/// term `a·m'` with `m | m'` down to `(a mod gcd(c, n))·m'` plus lower terms.
struct Rule {
    lead: Mono,
    lead_coeff: u64,
    g: u64,
    poly: Poly,
}

pub(crate) struct Reducer {
    modulus: u64,
    rules: Vec<Rule>,
}

impl Reducer {
    pub(crate) fn new(modulus: u32, relations: &[Poly]) -> Self {
        let n = u64::from(modulus);
        let rules = relations
            .iter()
            .filter_map(|r| {
                let (m, c) = r.leading()?;
                Some(Rule {
                    lead: m.clone(),
                    lead_coeff: u64::from(c),
                    g: gcd(u64::from(c), n),
                    poly: r.clone(),
                })
            })
            .collect();
        Reducer { modulus: n, rules }
    }

    /// Whether some rule with a unit leading coefficient rewrites `m` away.
    fn eliminates(&self, m: &Mono) -> bool {
        self.rules.iter().any(|r| r.g == 1 && r.lead.divides(m))
    }

    pub(crate) fn reduce(&self, p: &Poly) -> Poly {
        let mut p = p.clone();
        'outer: loop {
            for (m, &a) in p.terms.iter().rev() {
                let a = u64::from(a);
                for rule in &self.rules {
                    if a >= rule.g && rule.lead.divides(m) {
                        let target = a - a % rule.g;
                        let reduced_mod = self.modulus / rule.g;
                        let cprime = rule.lead_coeff / rule.g;
                        let inv = mod_inverse(cprime % reduced_mod, reduced_mod).expect("c/g is invertible modulo n/g");
                        let q = ((target / rule.g) % reduced_mod) * inv % reduced_mod;
                        let shift = m.div(&rule.lead);
                        let sub = rule.poly.mul_term(&shift, q);
                        p = p.sub(&sub);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        p
    }
}

/// Tokens of the relation mini-language.
#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str, vars: &[String]) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Num(text.parse().map_err(|_| format!("bad number {text}"))?));
            }
            _ => {
                let rest: String = chars[i..].iter().collect();
                let best = vars
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_empty() && rest.starts_with(v.as_str()))
                    .max_by_key(|(_, v)| v.len());
                match best {
                    Some((idx, v)) => {
                        out.push(Tok::Var(idx));
                        i += v.chars().count();
                    }
                    None => return Err(format!("unexpected '{c}' in \"{s}\"")),
                }
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    modulus: u32,
    nvars: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<Poly, String> {
        let mut acc = Poly::zero(self.modulus, self.nvars);
        let mut sign_neg = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                sign_neg = true;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    sign_neg = false;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    sign_neg = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<u32>, String> {
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(k)) => {
                    let k = *k;
                    self.pos += 1;
                    u32::try_from(k).map(Some).map_err(|_| "exponent too large".to_string())
                }
                _ => Err("expected exponent after '^'".to_string()),
            }
        } else {
            Ok(None)
        }
    }

    fn factor(&mut self) -> Result<Poly, String> {
        let base = match self.peek().cloned() {
            Some(Tok::Num(c)) => {
                self.pos += 1;
                Poly::constant(self.modulus, self.nvars, c)
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Poly::var(self.modulus, self.nvars, i)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err("missing ')'".to_string());
                }
                self.pos += 1;
                e
            }
            other => return Err(format!("unexpected token {other:?}")),
        };
        Ok(match self.exponent()? {
            Some(k) => base.pow(k),
            None => base,
        })
    }
}

/// Parses a polynomial expression such as `x^2-2`, `2x`, `x*y` or `(x+1)^2`.
pub(crate) fn parse_poly(s: &str, vars: &[String], modulus: u32) -> Result<Poly, String> {
    let toks = tokenize(s, vars)?;
    if toks.is_empty() {
        return Err("empty polynomial".to_string());
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        modulus,
        nvars: vars.len(),
    };
    let poly = p.expr()?;
    if p.pos != toks.len() {
        return Err(format!("trailing input in \"{s}\""));
    }
    Ok(poly)
}

/// Result of the quotient closure: labels and dense tables, elements in
/// canonical order (zero first, one second).
pub(crate) struct QuotientTables {
    pub(crate) labels: Vec<String>,
    pub(crate) add: Vec<u16>,
    pub(crate) mul: Vec<u16>,
}

const MAX_MONOMIALS: usize = 4096;

/// Builds `Z_modulus[vars]/(relations)` by closing the normal forms of all
/// monomials under addition and tabulating the reduced operations.
pub(crate) fn quotient_tables(
    modulus: u32,
    vars: &[String],
    relations: &[Poly],
    cap: usize,
) -> Result<QuotientTables, RingError> {
    let nvars = vars.len();
    let reducer = Reducer::new(modulus, relations);
    let unsupported = |why: String| RingError::UnsupportedPresentation(why);

    // Normal forms of monomials, breadth first. Multiples of an eliminated
    // monomial reduce through smaller ones and need no expansion.
    let mut seen: HashSet<Mono> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut generators: Vec<Poly> = Vec::new();
    queue.push_back(Mono::one(nvars));
    seen.insert(Mono::one(nvars));
    while let Some(m) = queue.pop_front() {
        if seen.len() > MAX_MONOMIALS {
            return Err(unsupported(
                "monomial normal forms do not terminate; quotient is not finite".to_string(),
            ));
        }
        let nf = reducer.reduce(&Poly::monomial(modulus, m.clone(), 1));
        let expand = !reducer.eliminates(&m);
        if !nf.is_zero() {
            generators.push(nf);
        }
        if !expand {
            continue;
        }
        for i in 0..nvars {
            let next = m.mul(&Mono::var(nvars, i));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }

    // Additive closure of the monomial normal forms.
    let mut elements: Vec<Poly> = vec![Poly::zero(modulus, nvars)];
    let mut members: HashSet<Poly> = elements.iter().cloned().collect();
    for g in &generators {
        if members.contains(g) {
            continue;
        }
        let mut multiples = vec![];
        let mut cur = g.clone();
        while !cur.is_zero() {
            multiples.push(cur.clone());
            cur = reducer.reduce(&cur.add(g));
            if multiples.len() > cap {
                return Err(RingError::TooLarge {
                    size: multiples.len(),
                    cap,
                });
            }
        }
        let base = elements.clone();
        for s in &base {
            for k in &multiples {
                let e = reducer.reduce(&s.add(k));
                if members.insert(e.clone()) {
                    elements.push(e);
                    if elements.len() > cap {
                        return Err(RingError::TooLarge {
                            size: elements.len(),
                            cap,
                        });
                    }
                }
            }
        }
    }
    if elements.len() < 2 {
        return Err(unsupported("relations collapse the ring to zero".to_string()));
    }

    // Canonical order: coefficient vectors over the monomials that occur,
    // highest monomial most significant.
    let mut basis: Vec<Mono> = elements
        .iter()
        .flat_map(|e| e.terms.keys().cloned())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    basis.sort_by(|a, b| b.cmp(a));
    let key = |p: &Poly| -> Vec<u32> { basis.iter().map(|m| p.terms.get(m).copied().unwrap_or(0)).collect() };
    elements.sort_by_key(|e| key(e));

    let one = reducer.reduce(&Poly::constant(modulus, nvars, 1));
    if elements[1] != one {
        return Err(unsupported("unity is not the least nonzero normal form".to_string()));
    }

    let index: HashMap<Poly, u16> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as u16))
        .collect();
    let n = elements.len();
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for i in 0..n {
        for j in i..n {
            let s = reducer.reduce(&elements[i].add(&elements[j]));
            let p = reducer.reduce(&elements[i].mul(&elements[j]));
            let (Some(&si), Some(&pi)) = (index.get(&s), index.get(&p)) else {
                return Err(unsupported(
                    "normal forms are not closed under the ring operations".to_string(),
                ));
            };
            add[i * n + j] = si;
            add[j * n + i] = si;
            mul[i * n + j] = pi;
            mul[j * n + i] = pi;
        }
    }
    let labels = elements.iter().map(|e| e.render(vars)).collect();
    Ok(QuotientTables { labels, add, mul })
}

/// Lexicographically smallest monic irreducible polynomial of degree `k` over
/// `Z_p`, coefficients compared from the constant term upward. Returned as the
/// dense coefficient list including the leading 1.
pub(crate) fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let k = k as usize;
    let total = (p as u64).pow(k as u32);
    for code in 0..total {
        // the constant term is the most significant digit of `code`
        let mut coeffs = vec![0u32; k + 1];
        let mut c = code;
        for i in (0..k).rev() {
            coeffs[i] = (c % u64::from(p)) as u32;
            c /= u64::from(p);
        }
        coeffs[k] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over a prime field")
}

fn dense_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    // den is monic
    let mut r: Vec<u32> = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &d) in den.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * d) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k <= 1 {
        return true;
    }
    for d in 1..=k / 2 {
        let total = (p as u64).pow(d as u32);
        for code in 0..total {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push((c % u64::from(p)) as u32);
                c /= u64::from(p);
            }
            g.push(1);
            if dense_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Vec<String> {
        vec!["x".to_string()]
    }

    #[test]
    fn parses_and_renders() {
        let p = parse_poly("x^2-2", &x(), 4).unwrap();
        assert_eq!(p.render(&x()), "2+x^2");
        let q = parse_poly("(x+1)^2", &x(), 2).unwrap();
        assert_eq!(q.render(&x()), "1+x^2");
        let xy = vec!["x".to_string(), "y".to_string()];
        assert_eq!(parse_poly("xy", &xy, 2).unwrap().render(&xy), "xy");
        assert_eq!(parse_poly("2x^2y+y", &xy, 3).unwrap().render(&xy), "y+2x^2y");
        assert!(parse_poly("z", &x(), 2).is_err());
        assert!(parse_poly("x^", &x(), 2).is_err());
    }

    #[test]
    fn reduction_with_non_unit_leading_coefficient() {
        let rels = vec![
            parse_poly("2x", &x(), 4).unwrap(),
            parse_poly("x^2-2", &x(), 4).unwrap(),
        ];
        let r = Reducer::new(4, &rels);
        let p = parse_poly("3x", &x(), 4).unwrap();
        assert_eq!(r.reduce(&p).render(&x()), "x");
        let p = parse_poly("x^3", &x(), 4).unwrap();
        assert_eq!(r.reduce(&p).render(&x()), "0");
        let p = parse_poly("x^2+1", &x(), 4).unwrap();
        assert_eq!(r.reduce(&p).render(&x()), "3");
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 0, 1, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn infinite_presentation_is_rejected() {
        let xy = vec!["x".to_string(), "y".to_string()];
        let rels = vec![parse_poly("x^2", &xy, 2).unwrap()];
        assert!(matches!(
            quotient_tables(2, &xy, &rels, 256),
            Err(RingError::UnsupportedPresentation(_)) | Err(RingError::TooLarge { .. })
        ));
    }
}
