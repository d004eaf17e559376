//! Slow, obviously-correct reference implementations. Nothing here calls
//! into the library except to convert between representations.

#![allow(dead_code)]

use std::collections::BTreeSet;

use omega_core::{GroundSet, OrderRelation, Relation};

pub type Pairs = BTreeSet<(usize, usize)>;

pub fn diagonal(n: usize) -> Pairs {
    (0..n).map(|x| (x, x)).collect()
}

pub fn off_diagonal(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn is_order(n: usize, r: &Pairs) -> bool {
    let refl = (0..n).all(|x| r.contains(&(x, x)));
    let anti = r.iter().all(|&(x, y)| x == y || !r.contains(&(y, x)));
    let trans = r.iter().all(|&(x, y)| {
        r.iter()
            .filter(|p| p.0 == y)
            .all(|&(_, z)| r.contains(&(x, z)))
    });
    refl && anti && trans
}

pub fn closure(n: usize, r: &Pairs) -> Pairs {
    let mut c: Pairs = r.union(&diagonal(n)).copied().collect();
    loop {
        let mut next = c.clone();
        for &(x, y) in &c {
            for &(y2, z) in &c {
                if y == y2 {
                    next.insert((x, z));
                }
            }
        }
        if next == c {
            return c;
        }
        c = next;
    }
}

/// Every order on `n` points, by trying each subset of the off-diagonal.
pub fn orders(n: usize) -> Vec<Pairs> {
    let free = off_diagonal(n);
    let mut out = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut r = diagonal(n);
        for (i, p) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                r.insert(*p);
            }
        }
        if is_order(n, &r) {
            out.push(r);
        }
    }
    out
}

/// Number of orders on `n` points, counted on packed adjacency words.
pub fn count_orders_bitwise(n: usize) -> usize {
    let free = off_diagonal(n);
    let mut count = 0;
    for mask in 0u64..1 << free.len() {
        let mut rows = vec![0u32; n];
        for (x, row) in rows.iter_mut().enumerate() {
            *row |= 1 << x;
        }
        for (i, &(x, y)) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[x] |= 1 << y;
            }
        }
        let anti = (0..n)
            .all(|x| (0..n).all(|y| x == y || rows[x] >> y & 1 == 0 || rows[y] >> x & 1 == 0));
        let trans =
            (0..n).all(|x| (0..n).all(|y| rows[x] >> y & 1 == 0 || rows[y] & !rows[x] == 0));
        if anti && trans {
            count += 1;
        }
    }
    count
}

pub fn to_relation(n: usize, r: &Pairs) -> Relation {
    Relation::from_pairs(GroundSet::new(n).unwrap(), r.iter().copied()).unwrap()
}

pub fn to_order(n: usize, r: &Pairs) -> OrderRelation {
    OrderRelation::new(to_relation(n, r)).unwrap()
}

pub fn from_relation(r: &Relation) -> Pairs {
    r.pairs().collect()
}

fn proper_subset(a: &Pairs, b: &Pairs) -> bool {
    a.len() < b.len() && a.is_subset(b)
}

/// Orders `S ⊋ R` with nothing strictly in between.
pub fn covers(all: &[Pairs], r: &Pairs) -> Vec<Pairs> {
    all.iter()
        .filter(|s| proper_subset(r, s))
        .filter(|s| {
            !all.iter()
                .any(|t| proper_subset(r, t) && proper_subset(t, s))
        })
        .cloned()
        .collect()
}

/// Orders `T ⊊ S` with nothing strictly in between.
pub fn maximal_below(all: &[Pairs], s: &Pairs) -> Vec<Pairs> {
    all.iter()
        .filter(|t| proper_subset(t, s))
        .filter(|t| {
            !all.iter()
                .any(|u| proper_subset(t, u) && proper_subset(u, s))
        })
        .cloned()
        .collect()
}

/// Intersection of the maximal proper suborders; `s` itself when there are none.
pub fn frattini(all: &[Pairs], s: &Pairs) -> Pairs {
    maximal_below(all, s)
        .into_iter()
        .fold(s.clone(), |acc, t| acc.intersection(&t).copied().collect())
}

/// Pairs outside `R ∪ R^op` that are minimal in the product order
/// `(x, y) <= (x', y')` iff `x <= x'` and `y' <= y`.
pub fn minimal_missing(n: usize, r: &Pairs) -> Pairs {
    let outside: Vec<(usize, usize)> = off_diagonal(n)
        .into_iter()
        .filter(|&(x, y)| !r.contains(&(x, y)) && !r.contains(&(y, x)))
        .collect();
    let le =
        |(a, b): (usize, usize), (c, d): (usize, usize)| r.contains(&(a, c)) && r.contains(&(d, b));
    outside
        .iter()
        .filter(|&&p| !outside.iter().any(|&q| q != p && le(q, p)))
        .copied()
        .collect()
}

/// `μ(R, S)` as the alternating count of chains `R = x_0 < .. < x_k = S`.
pub fn mobius_by_chains(all: &[Pairs], r: &Pairs, s: &Pairs) -> i64 {
    if r == s {
        return 1;
    }
    let inner: Vec<&Pairs> = all
        .iter()
        .filter(|t| proper_subset(r, t) && proper_subset(t, s))
        .collect();
    // signed count of chains from r to each inner element
    let mut sorted = inner.clone();
    sorted.sort_by_key(|t| t.len());
    let mut signed: Vec<i64> = Vec::with_capacity(sorted.len());
    for (i, t) in sorted.iter().enumerate() {
        let mut v = -1;
        for j in 0..i {
            if proper_subset(sorted[j], t) {
                v -= signed[j];
            }
        }
        signed.push(v);
    }
    -1 - signed.iter().sum::<i64>()
}

/// Rank of an integer matrix over GF(p).
pub fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v.rem_euclid(p)).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                let pivot_row = m[rank].clone();
                for (v, pv) in m[i].iter_mut().zip(&pivot_row) {
                    *v = (*v - f * pv).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i64>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0] as i128,
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k x k` minors and the `k`-th factor is `d_k / d_{k-1}`.
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<i128> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=nrows.min(ncols) {
        let mut d = 0i128;
        for rs in subsets(nrows, k) {
            for cs in subsets(ncols, k) {
                let minor: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                    .collect();
                d = gcd(d, det(&minor));
            }
        }
        if d == 0 {
            break;
        }
        out.push(d / prev);
        prev = d;
    }
    out
}
