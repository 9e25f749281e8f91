//! Constructors for the named group families.

use super::{GroupTable, PermutationGeneratorSet};
use crate::error::GroupError;
use crate::numtheory::{default_twist, gcd, pow_mod};

fn cap_check(order: usize, cap: usize) -> Result<(), GroupError> {
    if order > cap {
        Err(GroupError::OrderCapExceeded {
            cap,
            reached: order,
        })
    } else {
        Ok(())
    }
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<u32> {
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(f(a, b) as u32);
        }
    }
    mul
}

fn built(n: usize, f: impl Fn(usize, usize) -> usize, label: String) -> GroupTable {
    GroupTable::from_flat(n, table(n, f), label).expect("family constructor produced a non-group")
}

impl GroupTable {
    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The cyclic group `Z_n` with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        built(n, |a, b| (a + b) % n, format!("C{n}"))
    }

    /// Direct product of cyclic groups in mixed-radix indexing (first factor
    /// varies fastest).
    pub fn abelian(parts: &[usize], cap: usize) -> Result<Self, GroupError> {
        if let Some(bad) = parts.iter().find(|&&p| p == 0) {
            return Err(GroupError::InvalidParameter(format!(
                "abelian factor {bad} must be positive"
            )));
        }
        let n = parts
            .iter()
            .try_fold(1usize, |acc, &p| acc.checked_mul(p))
            .unwrap_or(usize::MAX);
        cap_check(n, cap)?;
        let digits = |mut x: usize| -> Vec<usize> {
            parts
                .iter()
                .map(|&p| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let label = if parts.is_empty() {
            "C1".to_string()
        } else {
            parts
                .iter()
                .map(|p| format!("C{p}"))
                .collect::<Vec<_>>()
                .join("x")
        };
        Ok(built(
            n,
            |a, b| {
                let (da, db) = (digits(a), digits(b));
                let mut idx = 0;
                for k in (0..parts.len()).rev() {
                    idx = idx * parts[k] + (da[k] + db[k]) % parts[k];
                }
                idx
            },
            label,
        ))
    }

    /// Dihedral group of order `2m`: `⟨r, s | r^m = s^2 = 1, srs = r^-1⟩`,
    /// element `r^i s^j` at index `i + m j`.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1, "dihedral parameter must be positive");
        built(
            2 * m,
            |a, b| {
                let (i, j) = (a % m, a / m);
                let (k, l) = (b % m, b / m);
                let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                rot + m * ((j + l) % 2)
            },
            format!("D{}", 2 * m),
        )
    }

    /// Dicyclic group of order `4m`: `⟨a, b | a^{2m} = 1, b^2 = a^m, b^-1 a b = a^-1⟩`,
    /// element `a^i b^j` at index `i + 2m j`.
    pub fn dicyclic(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::InvalidParameter(
                "dicyclic parameter must be positive".into(),
            ));
        }
        let half = 2 * m;
        let label = if m >= 2 && m.is_power_of_two() {
            format!("Q{}", 4 * m)
        } else {
            format!("Dic{}", 4 * m)
        };
        Ok(built(
            4 * m,
            |x, y| {
                let (i, j) = (x % half, x / half);
                let (k, l) = (y % half, y / half);
                if j == 0 {
                    (i + k) % half + half * l
                } else if l == 0 {
                    // a^i b a^k = a^{i-k} b
                    (i + half - k) % half + half
                } else {
                    // a^i b a^k b = a^{i-k} b^2 = a^{i-k+m}
                    (i + half - k + m) % half
                }
            },
            label,
        ))
    }

    /// Generalized quaternion group of order `2^n`, `n ≥ 3`. Elements are
    /// `a^i b^j` with `0 ≤ i < 2^{n-1}` at index `i + 2^{n-1} j`.
    pub fn generalized_quaternion(n: u32) -> Result<Self, GroupError> {
        if n < 3 {
            return Err(GroupError::InvalidParameter(format!(
                "generalized quaternion needs n >= 3, got {n}"
            )));
        }
        if n > 30 {
            return Err(GroupError::InvalidParameter(format!("n = {n} is too large")));
        }
        Self::dicyclic(1 << (n - 2))
    }

    pub fn symmetric(d: usize, cap: usize) -> Result<Self, GroupError> {
        if d == 0 {
            return Err(GroupError::InvalidParameter("degree must be positive".into()));
        }
        let mut gens = Vec::new();
        if d >= 2 {
            let mut t: Vec<usize> = (0..d).collect();
            t.swap(0, 1);
            gens.push(t);
        }
        if d >= 3 {
            gens.push((0..d).map(|i| (i + 1) % d).collect());
        }
        let set = PermutationGeneratorSet::new(d, gens)?;
        Ok(Self::from_perm_generators(&set, cap)?.with_label(format!("S{d}")))
    }

    pub fn alternating(d: usize, cap: usize) -> Result<Self, GroupError> {
        if d == 0 {
            return Err(GroupError::InvalidParameter("degree must be positive".into()));
        }
        let gens = (2..d)
            .map(|k| {
                let mut p: Vec<usize> = (0..d).collect();
                // 3-cycle (0 1 k)
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        let set = PermutationGeneratorSet::new(d, gens)?;
        Ok(Self::from_perm_generators(&set, cap)?.with_label(format!("Alt{d}")))
    }

    /// `A × B` with `(a, b)` at index `a |B| + b`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable, cap: usize) -> Result<Self, GroupError> {
        let nb = b.order();
        let n = a.order().saturating_mul(nb);
        cap_check(n, cap)?;
        Ok(built(
            n,
            |x, y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb),
            format!("{}x{}", a.label(), b.label()),
        ))
    }

    /// `N ⋊ H` where `action[h]` is the automorphism of `N` (as an image
    /// table) by which `h` acts. Multiplication is
    /// `(n1, h1)(n2, h2) = (n1 · φ_{h1}(n2), h1 h2)`, with `(n, h)` at index
    /// `n + |N| h`.
    pub fn semidirect_product(
        normal: &GroupTable,
        acting: &GroupTable,
        action: &[Vec<usize>],
    ) -> Result<Self, GroupError> {
        let nn = normal.order();
        let nh = acting.order();
        if action.len() != nh {
            return Err(GroupError::InvalidParameter(format!(
                "action has {} images for a group of order {nh}",
                action.len()
            )));
        }
        for (h, phi) in action.iter().enumerate() {
            let bijective = phi.len() == nn && {
                let mut seen = vec![false; nn];
                phi.iter().all(|&x| x < nn && !std::mem::replace(&mut seen[x], true))
            };
            if !bijective {
                return Err(GroupError::NotAnAutomorphism { element: h });
            }
            for x in 0..nn {
                for y in 0..nn {
                    if phi[normal.mul(x, y)] != normal.mul(phi[x], phi[y]) {
                        return Err(GroupError::NotAnAutomorphism { element: h });
                    }
                }
            }
        }
        for h1 in 0..nh {
            for h2 in 0..nh {
                let composed = &action[acting.mul(h1, h2)];
                if (0..nn).any(|x| composed[x] != action[h1][action[h2][x]]) {
                    return Err(GroupError::NotAHomomorphism { a: h1, b: h2 });
                }
            }
        }
        Ok(built(
            nn * nh,
            |x, y| {
                let (n1, h1) = (x % nn, x / nn);
                let (n2, h2) = (y % nn, y / nn);
                normal.mul(n1, action[h1][n2]) + nn * acting.mul(h1, h2)
            },
            format!("({}):({})", normal.label(), acting.label()),
        ))
    }

    /// `C_q ⋊ C_d` where the generator of `C_d` acts by `x ↦ x^r`.
    pub fn cyclic_semidirect(q: usize, d: usize, r: Option<usize>) -> Result<Self, GroupError> {
        if q == 0 || d == 0 {
            return Err(GroupError::InvalidParameter("factor orders must be positive".into()));
        }
        let r = match r {
            Some(r) => r,
            None => default_twist(q, d).ok_or_else(|| {
                GroupError::InvalidParameter(format!("C{d} has no nontrivial action on C{q}"))
            })?,
        } % q.max(1);
        if gcd(r as u64, q as u64) != 1 && q > 1 {
            return Err(GroupError::NotAnAutomorphism { element: 1 });
        }
        let action: Vec<Vec<usize>> = (0..d)
            .map(|k| {
                let rk = pow_mod(r, k, q);
                (0..q).map(|x| x * rk % q).collect()
            })
            .collect();
        let label = if Some(r) == default_twist(q, d) {
            format!("C{q}:C{d}")
        } else {
            format!("C{q}:C{d}[{r}]")
        };
        Ok(Self::semidirect_product(&Self::cyclic(q), &Self::cyclic(d), &action)?.with_label(label))
    }

    /// Heisenberg group mod `p`: `(C_p × C_p) ⋊ C_p` with the generator acting
    /// by `(x, y) ↦ (x + y, y)`. Exponent `p` for odd `p`; `D8` for `p = 2`.
    pub fn heisenberg(p: usize) -> Result<Self, GroupError> {
        if p < 2 {
            return Err(GroupError::InvalidParameter(format!("He{p}: p must be at least 2")));
        }
        let base = Self::abelian(&[p, p], usize::MAX)?;
        let action: Vec<Vec<usize>> = (0..p)
            .map(|k| {
                (0..p * p)
                    .map(|idx| {
                        let (x, y) = (idx % p, idx / p);
                        (x + k * y) % p + p * y
                    })
                    .collect()
            })
            .collect();
        Ok(Self::semidirect_product(&base, &Self::cyclic(p), &action)?.with_label(format!("He{p}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    fn count(g: &GroupTable, order: usize) -> usize {
        g.elem_orders().filter(|&o| o == order).count()
    }

    #[test]
    fn cyclic_orders() {
        assert_eq!(GroupTable::cyclic(1).order(), 1);
        assert_eq!(GroupTable::cyclic(4).elem_orders().collect::<Vec<_>>(), vec![1, 4, 2, 4]);
        assert_eq!(
            GroupTable::cyclic(6).elem_orders().collect::<Vec<_>>(),
            vec![1, 6, 3, 2, 3, 6]
        );
    }

    #[test]
    fn abelian_examples() {
        let v4 = GroupTable::abelian(&[2, 2], 200).unwrap();
        assert_eq!(v4.order_multiset(), vec![1, 2, 2, 2]);
        let g = GroupTable::abelian(&[4, 4], 200).unwrap();
        assert_eq!(g.order(), 16);
        assert!((1..16).all(|x| matches!(g.elem_order(x), 2 | 4)));
        assert_eq!(count(&g, 2), 3);
        assert_eq!(GroupTable::abelian(&[3], 200).unwrap().to_rows(), GroupTable::cyclic(3).to_rows());
        assert!(matches!(
            GroupTable::abelian(&[16, 16], 200),
            Err(GroupError::OrderCapExceeded { cap: 200, reached: 256 })
        ));
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(GroupTable::dihedral(1).order_multiset(), vec![1, 2]);
        let d8 = GroupTable::dihedral(4);
        assert_eq!(d8.order_multiset(), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        let s3 = GroupTable::symmetric(3, 200).unwrap();
        assert!(is_isomorphic(&GroupTable::dihedral(3), &s3));
    }

    #[test]
    fn quaternion_examples() {
        let q8 = GroupTable::generalized_quaternion(3).unwrap();
        assert_eq!(q8.order_multiset(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert_eq!(q8.label(), "Q8");
        let q16 = GroupTable::generalized_quaternion(4).unwrap();
        assert_eq!(q16.order(), 16);
        assert_eq!(count(&q16, 2), 1);
        for n in 3..=7 {
            assert_eq!(count(&GroupTable::generalized_quaternion(n).unwrap(), 2), 1, "n = {n}");
        }
        assert!(matches!(
            GroupTable::generalized_quaternion(2),
            Err(GroupError::InvalidParameter(_))
        ));
    }

    #[test]
    fn quaternion_presentation_holds() {
        for n in 3..=6u32 {
            let g = GroupTable::generalized_quaternion(n).unwrap();
            let half = 1usize << (n - 1);
            let (a, b) = (1, half);
            let a_inv = g.inv(a);
            assert_eq!(g.pow(a, 1 << (n - 2)), g.mul(b, b));
            assert_eq!(g.pow(a, half), 0);
            assert_eq!(g.mul(g.mul(g.inv(b), a), b), a_inv);
        }
    }

    #[test]
    fn symmetric_and_alternating() {
        assert_eq!(GroupTable::symmetric(3, 200).unwrap().order(), 6);
        let a4 = GroupTable::alternating(4, 200).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(count(&a4, 2), 3);
        assert_eq!(count(&a4, 3), 8);
        let s4 = GroupTable::symmetric(4, 200).unwrap();
        assert_eq!(
            (count(&s4, 1), count(&s4, 2), count(&s4, 3), count(&s4, 4)),
            (1, 9, 8, 6)
        );
        assert!(matches!(
            GroupTable::symmetric(6, 200),
            Err(GroupError::OrderCapExceeded { .. })
        ));
        assert_eq!(GroupTable::symmetric(1, 200).unwrap().order(), 1);
        assert_eq!(GroupTable::alternating(3, 200).unwrap().order(), 3);
    }

    #[test]
    fn direct_products() {
        let q8 = GroupTable::generalized_quaternion(3).unwrap();
        let t = GroupTable::direct_product(&GroupTable::trivial(), &q8, 200).unwrap();
        assert_eq!(t.to_rows(), q8.to_rows());
        let c2c2 = GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2), 200).unwrap();
        let v4 = GroupTable::abelian(&[2, 2], 200).unwrap();
        assert!(is_isomorphic(&c2c2, &v4));
        assert_eq!(c2c2.to_rows(), v4.to_rows());
        let g = GroupTable::direct_product(&GroupTable::cyclic(3), &q8, 200).unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn semidirect_examples() {
        let c3 = GroupTable::cyclic(3);
        let c2 = GroupTable::cyclic(2);
        let trivial_action = vec![vec![0, 1, 2], vec![0, 1, 2]];
        let g = GroupTable::semidirect_product(&c3, &c2, &trivial_action).unwrap();
        assert_eq!(g.to_rows(), GroupTable::direct_product(&c2, &c3, 200).unwrap().to_rows());

        let inversion = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let s = GroupTable::semidirect_product(&c3, &c2, &inversion).unwrap();
        assert!(is_isomorphic(&s, &GroupTable::symmetric(3, 200).unwrap()));

        let c4 = GroupTable::cyclic(4);
        let inv4 = vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]];
        let d = GroupTable::semidirect_product(&c4, &c2, &inv4).unwrap();
        assert!(is_isomorphic(&d, &GroupTable::dihedral(4)));
    }

    #[test]
    fn semidirect_rejects_bad_actions() {
        let c3 = GroupTable::cyclic(3);
        let c2 = GroupTable::cyclic(2);
        // not a bijection
        let bad = vec![vec![0, 1, 2], vec![0, 0, 0]];
        assert_eq!(
            GroupTable::semidirect_product(&c3, &c2, &bad),
            Err(GroupError::NotAnAutomorphism { element: 1 })
        );
        // bijection but not a homomorphism of C3
        let c4 = GroupTable::cyclic(4);
        let bad = vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]];
        assert_eq!(
            GroupTable::semidirect_product(&c4, &c2, &bad),
            Err(GroupError::NotAnAutomorphism { element: 1 })
        );
        // automorphisms, but C3 -> Aut(C3) sending the generator to inversion is not a homomorphism
        let bad = vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]];
        assert!(matches!(
            GroupTable::semidirect_product(&c3, &c3, &bad),
            Err(GroupError::NotAHomomorphism { .. })
        ));
    }

    #[test]
    fn order_p_cubed_types() {
        let he3 = GroupTable::heisenberg(3).unwrap();
        assert_eq!(he3.order(), 27);
        assert!(he3.elem_orders().all(|o| o == 1 || o == 3));
        assert!(!he3.is_abelian());
        let m27 = GroupTable::cyclic_semidirect(9, 3, None).unwrap();
        assert_eq!(m27.label(), "C9:C3");
        assert!(m27.elem_orders().any(|o| o == 9));
        assert!(!m27.is_abelian());
        assert!(is_isomorphic(&GroupTable::heisenberg(2).unwrap(), &GroupTable::dihedral(4)));
    }

    #[test]
    fn cyclic_semidirect_labels_and_twists() {
        assert_eq!(default_twist(3, 2), Some(2));
        assert_eq!(default_twist(7, 3), Some(2));
        assert_eq!(default_twist(5, 3), None);
        let dic12 = GroupTable::cyclic_semidirect(3, 4, None).unwrap();
        assert!(is_isomorphic(&dic12, &GroupTable::dicyclic(3).unwrap()));
        assert_eq!(default_twist(8, 2), Some(3));
        let sd16 = GroupTable::cyclic_semidirect(8, 2, None).unwrap();
        assert_eq!(sd16.label(), "C8:C2");
        assert!(!is_isomorphic(&sd16, &GroupTable::dihedral(8)));
        let d16 = GroupTable::cyclic_semidirect(8, 2, Some(7)).unwrap();
        assert_eq!(d16.label(), "C8:C2[7]");
        assert!(is_isomorphic(&d16, &GroupTable::dihedral(8)));
    }
}
