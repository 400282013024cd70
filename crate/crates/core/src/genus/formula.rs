/// `g(K_n) = ⌈(n−3)(n−4)/12⌉` for `n ≥ 3`, 0 below.
pub fn genus_complete(n: u32) -> u32 {
    if n < 3 {
        return 0;
    }
    let p = u64::from(n - 3) * u64::from(n.saturating_sub(4));
    p.div_ceil(12) as u32
}

/// `g(K_{m,n}) = ⌈(m−2)(n−2)/4⌉` for `m, n ≥ 2`, 0 otherwise.
pub fn genus_complete_bipartite(m: u32, n: u32) -> u32 {
    if m < 2 || n < 2 {
        return 0;
    }
    (u64::from(m - 2) * u64::from(n - 2)).div_ceil(4) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_values() {
        let expected = [0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 4, 5, 6];
        for (n, &g) in expected.iter().enumerate() {
            assert_eq!(genus_complete(n as u32), g, "K{n}");
        }
    }

    #[test]
    fn bipartite_values() {
        assert_eq!(genus_complete_bipartite(3, 7), 2);
        assert_eq!(genus_complete_bipartite(5, 5), 3);
        assert_eq!(genus_complete_bipartite(3, 3), 1);
        assert_eq!(genus_complete_bipartite(1, 9), 0);
        assert_eq!(genus_complete_bipartite(8, 4), 3);
        assert_eq!(genus_complete_bipartite(7, 3), genus_complete_bipartite(3, 7));
    }
}
