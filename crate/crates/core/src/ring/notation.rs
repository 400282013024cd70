//! Inline ring notation: product terms such as `Z4xF8`, `Z2[x]/(x^7) x Z2`,
//! `GF(3,2)`, `Z4[x]/(2,x)^2` or `Z2^4`.

use super::poly::{self, Poly};
use super::{is_prime, RingError, RingSpec};

fn err(input: &str, reason: impl Into<String>) -> RingError {
    RingError::Notation {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn smallest_prime_factor(n: u32) -> Option<u32> {
    (2..=n).find(|d| n % d == 0)
}

fn prime_power(n: u32) -> Option<(u32, u32)> {
    let p = smallest_prime_factor(n)?;
    let mut r = n;
    let mut k = 0;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Splits at top-level product separators (`x`, `×`, `*`, whitespace).
fn split_terms(s: &str) -> Result<Vec<String>, String> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    // set after an explicit separator until the next term starts
    let mut expect_term = true;
    let flush = |cur: &mut String, terms: &mut Vec<String>, expect: &mut bool| {
        if !cur.is_empty() {
            terms.push(std::mem::take(cur));
            *expect = false;
        }
    };
    for c in s.chars() {
        match c {
            '(' | '[' => {
                depth += 1;
                cur.push(c);
            }
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced brackets".into());
                }
                cur.push(c);
            }
            'x' | '×' | '*' if depth == 0 => {
                flush(&mut cur, &mut terms, &mut expect_term);
                if expect_term {
                    return Err("empty product term".into());
                }
                expect_term = true;
            }
            c if c.is_whitespace() => {
                if depth == 0 {
                    flush(&mut cur, &mut terms, &mut expect_term);
                }
            }
            _ => cur.push(c),
        }
    }
    if depth != 0 {
        return Err("unbalanced brackets".into());
    }
    flush(&mut cur, &mut terms, &mut expect_term);
    if expect_term {
        return Err("empty product term".into());
    }
    Ok(terms)
}

fn parse_uint(s: &str) -> Result<(u32, &str), String> {
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    if end == 0 {
        return Err(format!("expected a number at \"{s}\""));
    }
    let n = s[..end].parse::<u32>().map_err(|e| e.to_string())?;
    Ok((n, &s[end..]))
}

/// Optional `^k` suffix.
fn parse_exponent(s: &str) -> Result<(Option<u32>, &str), String> {
    match s.strip_prefix('^') {
        Some(rest) => {
            let (k, rest) = parse_uint(rest)?;
            if k == 0 {
                return Err("exponent must be positive".into());
            }
            Ok((Some(k), rest))
        }
        None => Ok((None, s)),
    }
}

fn field_spec(q: u32) -> Result<RingSpec, String> {
    match prime_power(q) {
        Some((p, 1)) => Ok(RingSpec::Zn { n: p }),
        Some((p, k)) => Ok(RingSpec::Gf { p, k }),
        None => Err(format!("no field of order {q}")),
    }
}

/// Splits the contents of a parenthesised list at top-level commas.
fn split_commas(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    out.push(cur);
    out
}

/// `[vars]/(gens)` with an optional `^k` on the ideal.
fn parse_quotient(n: u32, s: &str) -> Result<(RingSpec, &str), String> {
    let close = s.find(']').ok_or("missing ']'")?;
    let vars: Vec<String> = s[1..close].split(',').map(|v| v.trim().to_string()).collect();
    if vars
        .iter()
        .any(|v| v.is_empty() || !v.chars().all(|c| c.is_ascii_alphabetic()))
    {
        return Err("variables must be alphabetic names".into());
    }
    let rest = s[close + 1..]
        .strip_prefix("/(")
        .ok_or("expected '/(' after variables")?;
    let mut depth = 1;
    let mut end = None;
    for (i, c) in rest.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    end = Some(i);
                    break;
                }
            }
            _ => {}
        }
    }
    let end = end.ok_or("unclosed relation list")?;
    let gen_text: Vec<String> = split_commas(&rest[..end])
        .iter()
        .map(|g| g.trim().to_string())
        .collect();
    let gens: Vec<Poly> = gen_text
        .iter()
        .map(|g| poly::parse_poly(g, &vars, n))
        .collect::<Result<_, _>>()?;
    let (power, rest) = parse_exponent(&rest[end + 1..])?;
    let relations = match power {
        None => gen_text,
        Some(k) => {
            // (g1,...,gm)^k is generated by the k-fold products of generators
            let mut layer = vec![Poly::constant(n, vars.len(), 1)];
            for _ in 0..k {
                layer = layer.iter().flat_map(|p| gens.iter().map(move |g| p.mul(g))).collect();
            }
            let mut rendered: Vec<String> = layer.iter().filter(|r| !r.is_zero()).map(|r| r.render(&vars)).collect();
            rendered.sort();
            rendered.dedup();
            rendered
        }
    };
    let (p, _) = prime_power(n).ok_or_else(|| format!("coefficient ring Z{n} is not local"))?;
    Ok((RingSpec::Quotient { p, n, vars, relations }, rest))
}

fn parse_term(term: &str) -> Result<Vec<RingSpec>, String> {
    let t = term.trim();
    let (spec, rest) = if let Some(rest) = t.strip_prefix("GF(") {
        let close = rest.find(')').ok_or("unclosed GF(")?;
        let args: Vec<&str> = rest[..close].split(',').map(str::trim).collect();
        let spec = match args.as_slice() {
            [q] => field_spec(q.parse().map_err(|_| format!("bad field order \"{q}\""))?)?,
            [p, k] => {
                let p: u32 = p.parse().map_err(|_| format!("bad prime \"{p}\""))?;
                let k: u32 = k.parse().map_err(|_| format!("bad degree \"{k}\""))?;
                if !is_prime(p) || k == 0 {
                    return Err(format!("GF({p},{k}) is not a field"));
                }
                if k == 1 {
                    RingSpec::Zn { n: p }
                } else {
                    RingSpec::Gf { p, k }
                }
            }
            _ => return Err("GF takes one or two arguments".into()),
        };
        (spec, &rest[close + 1..])
    } else if let Some(rest) = t.strip_prefix('F') {
        let (q, rest) = parse_uint(rest)?;
        (field_spec(q)?, rest)
    } else if let Some(rest) = t.strip_prefix('Z') {
        let (n, rest) = parse_uint(rest)?;
        if n < 2 {
            return Err(format!("Z{n} is not a ring with 0 != 1"));
        }
        if rest.starts_with('[') {
            let (spec, rest) = parse_quotient(n, rest)?;
            if !rest.is_empty() {
                return Err(format!("unexpected \"{rest}\""));
            }
            return Ok(vec![spec]);
        }
        (RingSpec::Zn { n }, rest)
    } else {
        return Err(format!("unknown ring term \"{t}\""));
    };
    let (power, rest) = parse_exponent(rest)?;
    if !rest.is_empty() {
        return Err(format!("unexpected \"{rest}\""));
    }
    Ok(vec![spec; power.unwrap_or(1) as usize])
}

/// Parses the inline notation. A single term gives that ring; several terms
/// (or a power `Z2^4`) give their direct product.
pub fn parse_ring_notation(input: &str) -> Result<RingSpec, RingError> {
    let terms = split_terms(input).map_err(|r| err(input, r))?;
    let mut parts = Vec::new();
    for t in &terms {
        parts.extend(parse_term(t).map_err(|r| err(input, r))?);
    }
    if parts.len() == 1 {
        Ok(parts.pop().unwrap())
    } else {
        Ok(RingSpec::Product { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_terms() {
        assert_eq!(parse_ring_notation("Z4").unwrap(), RingSpec::Zn { n: 4 });
        assert_eq!(parse_ring_notation("F8").unwrap(), RingSpec::Gf { p: 2, k: 3 });
        assert_eq!(parse_ring_notation("F5").unwrap(), RingSpec::Zn { n: 5 });
        assert_eq!(parse_ring_notation("GF(3,2)").unwrap(), RingSpec::Gf { p: 3, k: 2 });
        assert_eq!(parse_ring_notation("GF(9)").unwrap(), RingSpec::Gf { p: 3, k: 2 });
    }

    #[test]
    fn products_and_powers() {
        let s = parse_ring_notation("Z4xZ11").unwrap();
        assert_eq!(
            s,
            RingSpec::Product {
                parts: vec![RingSpec::Zn { n: 4 }, RingSpec::Zn { n: 11 }]
            }
        );
        assert_eq!(parse_ring_notation("Z4 × Z11").unwrap(), s);
        assert_eq!(parse_ring_notation("Z4 Z11").unwrap(), s);
        let p = parse_ring_notation("Z2^4").unwrap();
        assert_eq!(
            p,
            RingSpec::Product {
                parts: vec![RingSpec::Zn { n: 2 }; 4]
            }
        );
    }

    #[test]
    fn quotients() {
        let s = parse_ring_notation("Z2[x]/(x^7)xZ2").unwrap();
        let RingSpec::Product { parts } = &s else { panic!() };
        assert_eq!(parts[0].name(), "Z2[x]/(x^7)");
        assert_eq!(s.build().unwrap().size(), 256);

        let r = parse_ring_notation("Z4[x]/(2,x)^2").unwrap();
        assert_eq!(r.name(), "Z4[x]/(2x,x^2)");
        assert_eq!(r.build().unwrap().size(), 8);

        let r = parse_ring_notation("Z2[x,y]/(x,y)^2").unwrap();
        assert_eq!(r.build().unwrap().size(), 8);

        let r = parse_ring_notation("Z4[x]/(2x,x^2-2)").unwrap();
        assert_eq!(r.build().unwrap().size(), 8);
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "",
            "Q4",
            "Z",
            "Z1",
            "F6",
            "Z2[x]/(x^2",
            "Z4x",
            "xZ4",
            "Z2^0",
            "Z6[x]/(x^2)",
        ] {
            assert!(
                matches!(parse_ring_notation(bad), Err(RingError::Notation { .. })),
                "{bad}"
            );
        }
    }
}
