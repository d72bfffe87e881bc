//! Fraction-free determinants of polynomial matrices.
//!
//! Bareiss one-step elimination keeps every intermediate entry a genuine
//! polynomial (each division is exact), so no rational-function arithmetic
//! ever appears.

use crate::poly::Poly;

/// Exact determinant of a square matrix of polynomials.
/// The empty matrix has determinant 1.
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    if n == 0 {
        return Poly::one();
    }
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact by construction");
            }
        }
        prev = a[k][k].clone();
        for row in a.iter_mut().take(n).skip(k + 1) {
            row[k] = Poly::zero();
        }
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Cofactor-expansion determinant, used as an independent check on small
/// matrices.
pub fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor));
        det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
    }
    det
}

/// Divide known linear factors `(var - root)` out of `p`, returning the
/// multiplicity found for each candidate and the final quotient.
/// Multiplicities are maximal; a non-root reports exponent 0.
pub fn divide_linear_factors(p: &Poly, candidates: &[(&str, crate::rat::Rat)]) -> (Vec<u32>, Poly) {
    let mut rest = p.clone();
    let mut exps = Vec::with_capacity(candidates.len());
    for (var, root) in candidates {
        let (m, q) = rest.extract_linear_root(var, root);
        exps.push(m);
        rest = q;
    }
    (exps, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratz, Rat};

    #[test]
    fn diagonal_and_scalar() {
        let h = Poly::var("h");
        let c = Poly::var("c");
        let m = vec![vec![h.clone(), Poly::zero()], vec![Poly::zero(), c.clone()]];
        assert_eq!(poly_det(&m), h.mul(&c));
        let m1 = vec![vec![Poly::constant(rat(1, 2)).mul(&c)]];
        assert_eq!(poly_det(&m1), c.scale(&rat(1, 2)));
        assert_eq!(poly_det(&[]), Poly::one());
    }

    #[test]
    fn singular_matrix() {
        let c = Poly::var("c");
        let m = vec![vec![c.clone(), c.clone()], vec![c.clone(), c.clone()]];
        assert!(poly_det(&m).is_zero());
    }

    #[test]
    fn agrees_with_cofactor_on_random_small_matrices() {
        // deterministic small-coefficient pseudo-random entries
        let mut state = 0x9e3779b9u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for n in 1..=4 {
            for _ in 0..8 {
                let m: Vec<Vec<Poly>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                Poly::from_terms(
                                    &["h", "c"],
                                    &[
                                        ([0, 0], Rat::from_integer(next().into())),
                                        ([1, 0], Rat::from_integer(next().into())),
                                        ([0, 1], Rat::from_integer(next().into())),
                                    ],
                                )
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(poly_det(&m), cofactor_det(&m));
            }
        }
    }

    #[test]
    fn linear_factor_division() {
        let c = Poly::var("c");
        let p = c.pow(2).mul(&c.add(&Poly::constant(rat(22, 5))));
        let (exps, rest) = divide_linear_factors(&p, &[("c", ratz(0)), ("c", rat(-22, 5))]);
        assert_eq!(exps, vec![2, 1]);
        assert!(rest.is_constant());
    }
}
