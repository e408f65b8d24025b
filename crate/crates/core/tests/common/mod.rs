//! Brute-force references shared by the integration and acceptance tests.
#![allow(dead_code)]

use verlinde_core::app::corpus;
use verlinde_core::fusion::FusionRing;
use verlinde_core::io::parse_fusion;

pub const CORPUS_RINGS: [&str; 6] = ["trivial", "z2", "z3", "fib", "s3", "fib_x_z2"];

pub fn shipped_ring(name: &str) -> FusionRing {
    parse_fusion(corpus::lookup(name).unwrap()).unwrap()
}

pub fn corpus_rings() -> Vec<(String, FusionRing)> {
    CORPUS_RINGS
        .iter()
        .map(|n| (n.to_string(), shipped_ring(&format!("{n}.fusion"))))
        .collect()
}

pub type Vector = Vec<u128>;

pub fn mul(n: &FusionRing, x: &Vector, y: &Vector) -> Vector {
    let r = n.rank();
    let mut z = vec![0; r];
    for a in 0..r {
        for b in 0..r {
            if x[a] == 0 || y[b] == 0 {
                continue;
            }
            for (c, zc) in z.iter_mut().enumerate() {
                *zc += x[a] * y[b] * u128::from(n.coefficient(a, b, c));
            }
        }
    }
    z
}

pub fn basis(r: usize, a: usize) -> Vector {
    let mut v = vec![0; r];
    v[a] = 1;
    v
}

/// Per unit component u: labels a with u*a = a form the block; the
/// dimension is the u-coefficient of s1*...*sm*omega^g with omega the sum
/// of a*dual(a) over the block.
pub fn oracle(n: &FusionRing, genus: u32, boundary: &[usize]) -> u128 {
    let r = n.rank();
    let mut total = 0;
    for &u in n.unit_components() {
        let block: Vec<usize> = (0..r).filter(|&a| n.coefficient(u, a, a) == 1).collect();
        if boundary.iter().any(|l| !block.contains(l)) {
            continue;
        }
        let mut omega = vec![0; r];
        for &a in &block {
            let p = mul(n, &basis(r, a), &basis(r, n.dual(a)));
            omega.iter_mut().zip(p).for_each(|(o, x)| *o += x);
        }
        let mut x = basis(r, u);
        for &s in boundary {
            x = mul(n, &x, &basis(r, s));
        }
        for _ in 0..genus {
            x = mul(n, &x, &omega);
        }
        total += x[u];
    }
    total
}

pub fn colourings(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![Vec::new()];
    for _ in 0..len {
        all = all
            .into_iter()
            .flat_map(|v| {
                (0..rank).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    all
}


/// S3 representation ring from its character table: classes of size 1, 3, 2.
pub const S3_CHARACTERS: [(&str, [i64; 3]); 3] = [("1", [1, 1, 1]), ("sgn", [1, -1, 1]), ("std", [2, 0, -1])];

/// `N_ab^c = (1/|G|) sum over classes |C| chi_a chi_b chi_c`, real characters.
pub fn s3_coefficient(a: usize, b: usize, c: usize) -> i64 {
    let sizes = [1i64, 3, 2];
    let (ca, cb, cc) = (S3_CHARACTERS[a].1, S3_CHARACTERS[b].1, S3_CHARACTERS[c].1);
    let sum: i64 = (0..3).map(|k| sizes[k] * ca[k] * cb[k] * cc[k]).sum();
    assert_eq!(sum % 6, 0);
    sum / 6
}

/// Compares a ring against the character-table oracle by label name.
pub fn s3_mismatch(ring: &FusionRing) -> Option<String> {
    if ring.rank() != 3 {
        return Some(format!("rank {}", ring.rank()));
    }
    for a in 0..3 {
        let la = ring.label_by_name(S3_CHARACTERS[a].0)?;
        if ring.dual(la) != la {
            return Some(format!("{} is not self-dual", S3_CHARACTERS[a].0));
        }
        for b in 0..3 {
            for c in 0..3 {
                let lb = ring.label_by_name(S3_CHARACTERS[b].0)?;
                let lc = ring.label_by_name(S3_CHARACTERS[c].0)?;
                if i64::from(ring.coefficient(la, lb, lc)) != s3_coefficient(a, b, c) {
                    return Some(format!(
                        "N[{},{}->{}] differs from the character table",
                        S3_CHARACTERS[a].0, S3_CHARACTERS[b].0, S3_CHARACTERS[c].0
                    ));
                }
            }
        }
    }
    None
}
