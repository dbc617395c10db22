//! Linear-algebra route to q-representatives of uniform set families.
//!
//! The uniform matroid of rank `p + q` on `|U| + q` elements is represented
//! by a Vandermonde matrix over GF(2^31 - 1) with evaluation points
//! `1, 2, ..., |U| + q`; any `p + q` columns are independent. A `p`-set maps
//! to the vector of all `p x p` minors of its columns (its wedge). A row
//! basis of the wedge vectors is a `q`-representative: for `|Y| = q` the
//! determinant of `X ∪ Y` is a linear functional of the wedge of `X`, and it
//! is nonzero exactly when `X` and `Y` are disjoint. Smaller `Y` are padded
//! with the `q` dummy columns, which never occur in a member set.

pub(crate) const MODULUS: u64 = 2_147_483_647;

fn mul(a: u64, b: u64) -> u64 {
    a * b % MODULUS
}

/// Saturating binomial coefficient.
pub(crate) fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Exact binomials for `n <= 63`.
struct BinomTable {
    rows: Vec<Vec<u64>>,
}

impl BinomTable {
    fn new(max_n: usize) -> Self {
        let mut rows = vec![vec![0u64; max_n + 2]; max_n + 1];
        for n in 0..=max_n {
            rows[n][0] = 1;
            for k in 1..=n {
                rows[n][k] = rows[n - 1][k - 1] + if k < n { rows[n - 1][k] } else { 0 };
            }
        }
        BinomTable { rows }
    }

    fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.rows[n][k]
        }
    }
}

/// Rough operation count of [`wedge`] for one set.
pub(crate) fn wedge_cost(rank: usize, p: usize) -> u128 {
    (1..=p)
        .map(|j| binom(rank, j).saturating_mul(j as u128))
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// All `p x p` minors of the `rank x p` Vandermonde block whose columns are
/// the points `e + 1` for `e` in `set`, indexed by the colex rank of the row
/// subset. Requires `rank <= 63`.
pub(crate) fn wedge(set: &[usize], rank: usize) -> Vec<u32> {
    assert!(rank <= 63, "rank {rank} too large for bitmask enumeration");
    let p = set.len();
    assert!(p <= rank);
    let table = BinomTable::new(rank);

    // powers[b][i] = x_b^i
    let powers: Vec<Vec<u64>> = set
        .iter()
        .map(|&e| {
            let x = (e as u64 + 1) % MODULUS;
            let mut row = Vec::with_capacity(rank);
            let mut acc = 1u64;
            for _ in 0..rank {
                row.push(acc);
                acc = mul(acc, x);
            }
            row
        })
        .collect();

    let mut prev: Vec<u32> = vec![1];
    let mut elems: Vec<usize> = Vec::with_capacity(p);
    let mut prefix: Vec<u64> = Vec::with_capacity(p + 1);
    let mut suffix: Vec<u64> = vec![0; p + 1];
    for j in 1..=p {
        let col = j - 1;
        let size = table.get(rank, j) as usize;
        let mut cur = vec![0u32; size];
        let mut mask: u64 = (1u64 << j) - 1;
        let limit: u64 = 1u64 << rank;
        let mut idx = 0usize;
        while mask < limit {
            elems.clear();
            let mut m = mask;
            while m != 0 {
                elems.push(m.trailing_zeros() as usize);
                m &= m - 1;
            }
            prefix.clear();
            prefix.push(0);
            for (u, &e) in elems.iter().enumerate() {
                let last = *prefix.last().unwrap();
                prefix.push(last + table.get(e, u + 1));
            }
            suffix[j] = 0;
            for u in (0..j).rev() {
                suffix[u] = suffix[u + 1] + table.get(elems[u], u);
            }
            let mut acc = 0u64;
            for t in 0..j {
                let minor_rank = (prefix[t] + suffix[t + 1]) as usize;
                let minor = prev[minor_rank] as u64;
                if minor == 0 {
                    continue;
                }
                let term = mul(powers[col][elems[t]], minor);
                if (t + col) % 2 == 0 {
                    acc = (acc + term) % MODULUS;
                } else {
                    acc = (acc + MODULUS - term) % MODULUS;
                }
            }
            cur[idx] = acc as u32;
            idx += 1;

            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        debug_assert_eq!(idx, size);
        prev = cur;
    }
    prev
}

fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    base %= MODULUS;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, MODULUS - 2)
}

/// Incremental row-echelon basis over GF(2^31 - 1).
#[derive(Default)]
pub(crate) struct EchelonBasis {
    rows: Vec<(usize, Vec<u32>)>,
}

impl EchelonBasis {
    /// Adds `v` if it is independent of the rows so far.
    pub(crate) fn insert(&mut self, v: &[u32]) -> bool {
        let mut w: Vec<u64> = v.iter().map(|&x| x as u64).collect();
        for (pivot, row) in &self.rows {
            let f = w[*pivot];
            if f == 0 {
                continue;
            }
            for (wi, &ri) in w.iter_mut().zip(row.iter()) {
                if ri != 0 {
                    *wi = (*wi + MODULUS - mul(f, ri as u64)) % MODULUS;
                }
            }
        }
        let Some(pivot) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let scale = inv(w[pivot]);
        let row = w.iter().map(|&x| mul(x, scale) as u32).collect();
        self.rows.push((pivot, row));
        true
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain Gaussian-elimination determinant, independent of the DP.
    fn det(mut m: Vec<Vec<u64>>) -> u64 {
        let n = m.len();
        let mut sign = false;
        let mut acc = 1u64;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| m[r][c] != 0) else {
                return 0;
            };
            if p != c {
                m.swap(p, c);
                sign = !sign;
            }
            let iv = inv(m[c][c]);
            acc = mul(acc, m[c][c]);
            for r in c + 1..n {
                let f = mul(m[r][c], iv);
                let (top, bottom) = m.split_at_mut(r);
                for (x, &y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                    *x = (*x + MODULUS - mul(f, y)) % MODULUS;
                }
            }
        }
        if sign {
            (MODULUS - acc) % MODULUS
        } else {
            acc
        }
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        // colex order
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut mask: u64 = (1u64 << k) - 1;
        if k == 0 {
            return vec![vec![]];
        }
        while mask < (1u64 << n) {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        out
    }

    #[test]
    fn wedge_matches_direct_minors() {
        let set = [0usize, 3, 4];
        let rank = 6;
        let w = wedge(&set, rank);
        let rows = subsets(rank, set.len());
        assert_eq!(w.len(), rows.len());
        for (i, rs) in rows.iter().enumerate() {
            let m: Vec<Vec<u64>> = rs
                .iter()
                .map(|&r| set.iter().map(|&e| pow(e as u64 + 1, r as u64)).collect())
                .collect();
            assert_eq!(w[i] as u64, det(m), "row subset {rs:?}");
        }
    }

    #[test]
    fn binom_values() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(200, 100), u128::MAX);
    }

    #[test]
    fn basis_detects_dependence() {
        let mut b = EchelonBasis::default();
        assert!(b.insert(&[1, 2, 3]));
        assert!(b.insert(&[0, 1, 1]));
        assert!(!b.insert(&[2, 5, 7]));
        assert_eq!(b.rank(), 2);
    }
}
