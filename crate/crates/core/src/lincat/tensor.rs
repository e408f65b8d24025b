use num_traits::Zero;

use super::PresentedCategory;
use crate::exact::Rational;

/// Objects `(p, p')` at `p * n' + p'`, hom basis pairs `(f, f')` at
/// `f * d' + f'`, composition factorwise.
pub fn tensor_product(a: &PresentedCategory, b: &PresentedCategory) -> PresentedCategory {
    let (na, nb) = (a.object_count(), b.object_count());
    let n = na * nb;
    let split = |x: usize| (x / nb, x % nb);
    let objects: Vec<String> = (0..n)
        .map(|x| {
            let (p, p2) = split(x);
            format!("({},{})", a.object_name(p), b.object_name(p2))
        })
        .collect();
    let mut homs = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let ((p, p2), (q, q2)) = (split(x), split(y));
            let mut names = Vec::new();
            for f in a.hom_basis(p, q) {
                for g in b.hom_basis(p2, q2) {
                    names.push(format!("{}>{}:{}*{}", objects[x], objects[y], f, g));
                }
            }
            homs.push(names);
        }
    }
    let mut tables = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ((p, p2), (q, q2), (r, r2)) = (split(x), split(y), split(z));
                let (dpq, dpq2) = (a.hom_dim(p, q), b.hom_dim(p2, q2));
                let (dqr, dqr2) = (a.hom_dim(q, r), b.hom_dim(q2, r2));
                let (dpr, dpr2) = (a.hom_dim(p, r), b.hom_dim(p2, r2));
                let (fdim, hdim) = (dpq * dpq2, dpr * dpr2);
                let mut table = vec![Rational::zero(); dqr * dqr2 * fdim * hdim];
                for g in 0..dqr {
                    for g2 in 0..dqr2 {
                        for f in 0..dpq {
                            for f2 in 0..dpq2 {
                                let left = a.compose_basis(p, q, r, g, f);
                                let right = b.compose_basis(p2, q2, r2, g2, f2);
                                let base = ((g * dqr2 + g2) * fdim + f * dpq2 + f2) * hdim;
                                for (h, c) in left.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                                    for (h2, c2) in right.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                                        table[base + h * dpr2 + h2] = c * c2;
                                    }
                                }
                            }
                        }
                    }
                }
                tables.push(table);
            }
        }
    }
    let identities = (0..n)
        .map(|x| {
            let (p, p2) = split(x);
            a.identity(p)
                .iter()
                .flat_map(|c| b.identity(p2).iter().map(move |c2| c * c2))
                .collect()
        })
        .collect();
    PresentedCategory::from_tables(objects, homs, tables, identities).expect("shapes are consistent")
}
