//! Double description method for polyhedral cones.
//!
//! Given rows `a_1, ..., a_m`, computes generators of
//! `{ y : <a_k, y> >= 0 for all k }` as a lineality basis plus one
//! representative per extreme ray of the pointed part. Lineality directions
//! are eliminated first whenever a constraint cuts them, which keeps the
//! remaining rays extreme in the quotient and lets adjacency be decided
//! combinatorially from incidence sets.

use num::{Signed, Zero};

use super::rat::{dot, normalize_direction, normalize_line, unit, Rat};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConeGenerators {
    pub rays: Vec<Vec<Rat>>,
    pub lines: Vec<Vec<Rat>>,
}

#[derive(Clone)]
struct Ray {
    v: Vec<Rat>,
    zero_set: Vec<u64>,
}

fn set_bit(bits: &mut Vec<u64>, k: usize) {
    let w = k / 64;
    if bits.len() <= w {
        bits.resize(w + 1, 0);
    }
    bits[w] |= 1 << (k % 64);
}

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn contains_all(sup: &[u64], sub: &[u64]) -> bool {
    sub.iter()
        .enumerate()
        .all(|(i, &w)| w & !sup.get(i).copied().unwrap_or(0) == 0)
}

pub fn cone_generators(dim: usize, constraints: &[Vec<Rat>]) -> ConeGenerators {
    let mut lines: Vec<Vec<Rat>> = (0..dim).map(|i| unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed = 0usize;

    for a in constraints {
        debug_assert_eq!(a.len(), dim);
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        let k = processed;
        processed += 1;

        if let Some(pos) = lines.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lines.swap_remove(pos);
            let al0 = dot(a, &l0);
            for l in lines.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    let f = al / &al0;
                    for (x, y) in l.iter_mut().zip(&l0) {
                        *x -= &f * y;
                    }
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    let f = ar / &al0;
                    for (x, y) in r.v.iter_mut().zip(&l0) {
                        *x -= &f * y;
                    }
                    r.v = normalize_direction(&r.v);
                }
                set_bit(&mut r.zero_set, k);
            }
            if al0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -&*x);
            }
            // l0 is tight on every earlier constraint
            let mut zs = Vec::new();
            for j in 0..k {
                set_bit(&mut zs, j);
            }
            rays.push(Ray {
                v: normalize_direction(&l0),
                zero_set: zs,
            });
            for l in lines.iter_mut() {
                *l = normalize_line(l);
            }
            continue;
        }

        let vals: Vec<Rat> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let mut pos_idx = Vec::new();
        let mut neg_idx = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            if v.is_positive() {
                pos_idx.push(i);
            } else if v.is_negative() {
                neg_idx.push(i);
            }
        }
        for &p in &pos_idx {
            for &q in &neg_idx {
                let common = intersect(&rays[p].zero_set, &rays[q].zero_set);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == q || !contains_all(&r.zero_set, &common));
                if !adjacent {
                    continue;
                }
                let ap = &vals[p];
                let aq = -&vals[q];
                let w: Vec<Rat> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| ap * x + &aq * y)
                    .collect();
                let mut zs = common;
                set_bit(&mut zs, k);
                next.push(Ray {
                    v: normalize_direction(&w),
                    zero_set: zs,
                });
            }
        }
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                set_bit(&mut r.zero_set, k);
            }
            next.push(r);
        }
        rays = next;
    }

    let mut out_rays: Vec<Vec<Rat>> = Vec::new();
    for r in rays {
        if r.v.iter().all(Zero::is_zero) {
            continue;
        }
        if !out_rays.contains(&r.v) {
            out_rays.push(r.v);
        }
    }
    ConeGenerators {
        rays: out_rays,
        lines,
    }
}
