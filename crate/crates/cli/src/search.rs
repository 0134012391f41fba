//! Exhaustive searches behind two suites: the metacyclic grid and the
//! semidirect products `(C_4 × C_2) ⋊ C_2`.

use irratio_core::arith::{gcd, multiplicative_order, units_mod};
use irratio_core::constructions::basic::{abelian, cyclic};
use irratio_core::element::Element;
use irratio_core::products::{semidirect_product, ActionMap, Automorphism};
use irratio_core::{is_irrational, Group, Result};

use crate::suites::has_d8_quotient_by_central_involution;

/// `(n, m, k)` with `n, m >= 2`, `nm <= max_nm` and `k` a unit mod `n`
/// whose order divides `m`, sorted by `m`, then `n`, then `k`.
///
/// Only one `k` per cyclic subgroup `⟨k⟩` is kept, the least generator:
/// replacing `k` by `k^j` with `j` prime to `ord(k)` only renumbers the
/// generator of `C_m`, so the groups are isomorphic.
pub fn metacyclic_grid(max_nm: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for m in 2..=max_nm / 2 {
        for n in 2..=max_nm / m {
            let n64 = n as u64;
            for k in units_mod(n64) {
                let Some(d) = multiplicative_order(k, n64) else {
                    continue;
                };
                if m as u64 % d != 0 {
                    continue;
                }
                let least = (1..=d)
                    .filter(|&j| gcd(j, d) == 1)
                    .map(|j| irratio_core::arith::pow_mod(k, j, n64))
                    .min()
                    .unwrap_or(k);
                if least == k {
                    out.push((n, m, k as u32));
                }
            }
        }
    }
    out
}

pub struct SearchHit {
    pub group: Group,
    /// Images of the generators `(1,0)` and `(0,1)` of `C_4 × C_2`.
    pub images: ([u32; 2], [u32; 2]),
    pub irrational: bool,
    pub d8_quotient: bool,
}

/// Every semidirect product `(C_4 × C_2) ⋊ C_2` by an automorphism of
/// order at most 2, with its irrationality and whether it maps onto `D_8`.
pub fn smallgroup16_search() -> Result<Vec<SearchHit>> {
    let a = abelian(&[4, 2])?;
    let h = cyclic(2)?;
    a.enumeration()?;
    let elems: Vec<[u32; 2]> = a
        .elements()?
        .iter()
        .map(|e| {
            let w = e.as_word().unwrap();
            [w[0], w[1]]
        })
        .collect();
    let mut hits = Vec::new();
    for &u in &elems {
        for &v in &elems {
            // (x, y) -> x u + y v needs 2v = 0
            if (2 * v[0]) % 4 != 0 {
                continue;
            }
            let image =
                |e: [u32; 2]| Element::word(vec![(e[0] * u[0] + e[1] * v[0]) % 4, (e[0] * u[1] + e[1] * v[1]) % 2]);
            let table = elems
                .iter()
                .map(|&e| a.member_index(&image(e)))
                .collect::<Result<Vec<u32>>>()?;
            let mut seen = vec![false; table.len()];
            if !table.iter().all(|&t| !std::mem::replace(&mut seen[t as usize], true)) {
                continue;
            }
            if table.iter().enumerate().any(|(i, &t)| table[t as usize] as usize != i) {
                continue;
            }
            let label = format!("(C4xC2):C2 [a->{u:?}, b->{v:?}]");
            let action = ActionMap::new(&h, &a, vec![Automorphism::Table(table)])?;
            let g = semidirect_product(action)?.with_label(label);
            let irrational = is_irrational(&g)?;
            let d8_quotient = has_d8_quotient_by_central_involution(&g)?;
            hits.push(SearchHit {
                group: g,
                images: (u, v),
                irrational,
                d8_quotient,
            });
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_keeps_one_k_per_cyclic_subgroup() {
        let grid = metacyclic_grid(42);
        // units of Z/7 of order dividing 6: subgroups of orders 1, 2, 3, 6
        let ks: Vec<u32> = grid.iter().filter(|t| t.0 == 7 && t.1 == 6).map(|t| t.2).collect();
        assert_eq!(ks, vec![1, 2, 3, 6]);
        assert!(grid.iter().all(|&(n, m, _)| n * m <= 42));
    }

    #[test]
    fn search_covers_every_involutive_automorphism() {
        let hits = smallgroup16_search().unwrap();
        // Aut(C4 x C2) is D8: identity plus five involutions
        assert_eq!(hits.len(), 6);
        assert!(hits.iter().any(|h| h.irrational && h.d8_quotient));
        assert!(hits.iter().all(|h| h.group.order().unwrap() == 16));
    }
}
