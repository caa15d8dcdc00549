//! Deterministic generators: Steiner triple systems, greedy random linear
//! systems, and random edge deletion.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` so that a
//! seed fully determines the output.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{pair_slot, EdgeId, LinearTripleSystem, Triple};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Consecutive rejected samples before switching to explicit enumeration.
const REJECTION_ATTEMPTS: usize = 256;

/// A Steiner triple system on `n` vertices.
///
/// `n = 3 (mod 6)` uses the Bose construction over the idempotent commutative
/// quasigroup `x * y = (x + y)(v + 1)/2 mod v`, `v = n/3`. `n = 1 (mod 6)` uses
/// the Skolem construction over the half-idempotent commutative quasigroup of
/// order `2t = (n - 1)/3`, with the extra point `n - 1` playing infinity.
/// Point `(x, i)` of either construction is vertex `i * v + x`.
pub fn generate_steiner(n: usize) -> Result<LinearTripleSystem> {
    if n < 3 || !matches!(n % 6, 1 | 3) {
        return Err(Error::InadmissibleOrder { n });
    }
    let triples = if n % 6 == 3 { bose(n) } else { skolem(n) };
    let system = LinearTripleSystem::from_triples(n, triples).expect("classical construction produces a linear system");
    debug_assert!(system.is_steiner());
    Ok(system)
}

fn point(v: usize, x: usize, level: usize) -> u32 {
    (level * v + x) as u32
}

fn bose(n: usize) -> Vec<Triple> {
    let v = n / 3;
    let half = v.div_ceil(2);
    let op = |x: usize, y: usize| (x + y) * half % v;
    let mut out = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..v {
        out.push(triple(point(v, x, 0), point(v, x, 1), point(v, x, 2)));
    }
    for x in 0..v {
        for y in (x + 1)..v {
            for i in 0..3 {
                out.push(triple(point(v, x, i), point(v, y, i), point(v, op(x, y), (i + 1) % 3)));
            }
        }
    }
    out
}

fn skolem(n: usize) -> Vec<Triple> {
    let order = (n - 1) / 3;
    let t = order / 2;
    let infinity = (n - 1) as u32;
    let op = |x: usize, y: usize| {
        let s = (x + y) % order;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            (s - 1) / 2 + t
        }
    };
    let mut out = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..t {
        out.push(triple(point(order, x, 0), point(order, x, 1), point(order, x, 2)));
    }
    for x in 0..t {
        for i in 0..3 {
            out.push(triple(infinity, point(order, x + t, i), point(order, x, (i + 1) % 3)));
        }
    }
    for x in 0..order {
        for y in (x + 1)..order {
            for i in 0..3 {
                out.push(triple(
                    point(order, x, i),
                    point(order, y, i),
                    point(order, op(x, y), (i + 1) % 3),
                ));
            }
        }
    }
    out
}

fn triple(a: u32, b: u32, c: u32) -> Triple {
    Triple::new(a, b, c).expect("construction never repeats a vertex")
}

fn reaches(m: usize, n: usize, target: &Rational) -> bool {
    let pairs = (n * n.saturating_sub(1) / 2) as i128;
    pairs > 0 && Rational::new(3 * m as i128, pairs) >= *target
}

/// Greedy random linear system.
///
/// Each step inserts a triple chosen uniformly among the triples whose three
/// pairs are still uncovered, until the density reaches `target_density` or no
/// such triple remains. The achieved density is `linear_density()` of the
/// result and may fall short of the target.
///
/// Sampling first draws uniform random triples and rejects covered ones. After
/// `REJECTION_ATTEMPTS` consecutive rejections the insertable triples are
/// enumerated once and maintained as an explicit list; both phases pick
/// uniformly among insertable triples.
pub fn generate_random_linear(n: usize, target_density: Rational, seed: u64) -> LinearTripleSystem {
    if n < 3 {
        return LinearTripleSystem::empty(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covered = vec![false; n * (n - 1) / 2];
    let mut chosen: Vec<Triple> = Vec::new();

    let free = |covered: &[bool], t: &Triple| {
        t.pairs()
            .iter()
            .all(|&(u, v)| !covered[pair_slot(n, u as usize, v as usize)])
    };
    let cover = |covered: &mut [bool], t: &Triple| {
        for (u, v) in t.pairs() {
            covered[pair_slot(n, u as usize, v as usize)] = true;
        }
    };

    // Rejection phase.
    let mut misses = 0;
    while misses < REJECTION_ATTEMPTS && !reaches(chosen.len(), n, &target_density) {
        let a = rng.random_range(0..n) as u32;
        let b = rng.random_range(0..n) as u32;
        let c = rng.random_range(0..n) as u32;
        let Some(t) = Triple::new(a, b, c) else { continue };
        if free(&covered, &t) {
            cover(&mut covered, &t);
            chosen.push(t);
            misses = 0;
        } else {
            misses += 1;
        }
    }

    // Enumeration phase.
    if !reaches(chosen.len(), n, &target_density) {
        let mut candidates = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if covered[pair_slot(n, a, b)] {
                    continue;
                }
                for c in (b + 1)..n {
                    if !covered[pair_slot(n, a, c)] && !covered[pair_slot(n, b, c)] {
                        candidates.push(Triple([a as u32, b as u32, c as u32]));
                    }
                }
            }
        }
        while !candidates.is_empty() && !reaches(chosen.len(), n, &target_density) {
            let t = candidates[rng.random_range(0..candidates.len())];
            cover(&mut covered, &t);
            chosen.push(t);
            candidates.retain(|c| free(&covered, c));
        }
    }

    LinearTripleSystem::from_triples(n, chosen).expect("greedy insertion keeps the system linear")
}

/// Deletes uniformly random edges, keeping the fewest edges whose density is
/// still at least `target_density`. Surviving edges keep their relative order.
pub fn dilute(system: &LinearTripleSystem, target_density: Rational, seed: u64) -> Result<LinearTripleSystem> {
    let current = system.linear_density()?;
    if target_density > current {
        return Err(Error::TargetAboveCurrent {
            target: rational::display(&target_density),
            current: rational::display(&current),
        });
    }
    let pairs = (system.n() * (system.n() - 1) / 2) as i128;
    let keep =
        rational::ceil(&(target_density * Rational::from_integer(pairs) / Rational::from_integer(3))).max(0) as usize;
    let mut order: Vec<EdgeId> = (0..system.m() as EdgeId).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut deleted = vec![false; system.m()];
    for &e in &order[..system.m() - keep] {
        deleted[e as usize] = true;
    }
    Ok(system.restrict((0..system.m() as EdgeId).filter(|&e| !deleted[e as usize])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair_coverage(h: &LinearTripleSystem) -> Vec<usize> {
        let n = h.n();
        let mut hits = vec![0; n * n];
        for t in h.edges() {
            for (u, v) in t.pairs() {
                hits[u as usize * n + v as usize] += 1;
            }
        }
        (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .map(|(u, v)| hits[u * n + v])
            .collect()
    }

    #[test]
    fn steiner_orders_cover_all_pairs_once() {
        for n in (3..=45).filter(|n| n % 6 == 1 || n % 6 == 3) {
            let h = generate_steiner(n).unwrap();
            assert_eq!(h.m(), n * (n - 1) / 6, "n = {n}");
            assert!(pair_coverage(&h).into_iter().all(|c| c == 1), "n = {n}");
            assert_eq!(h.linear_density().unwrap(), Rational::from_integer(1));
        }
    }

    #[test]
    fn steiner_small_examples() {
        assert_eq!(generate_steiner(7).unwrap().m(), 7);
        assert_eq!(generate_steiner(9).unwrap().m(), 12);
        assert_eq!(generate_steiner(8).unwrap_err(), Error::InadmissibleOrder { n: 8 });
        assert_eq!(generate_steiner(1).unwrap_err(), Error::InadmissibleOrder { n: 1 });
        assert_eq!(generate_steiner(7).unwrap(), generate_steiner(7).unwrap());
    }

    #[test]
    fn random_single_candidate() {
        let h = generate_random_linear(3, Rational::from_integer(1), 99);
        assert_eq!(h.edges(), &[Triple([0, 1, 2])]);
    }

    #[test]
    fn random_is_deterministic_and_reaches_half() {
        let a = generate_random_linear(100, Rational::new(1, 2), 1);
        let b = generate_random_linear(100, Rational::new(1, 2), 1);
        assert_eq!(a, b);
        assert!(a.linear_density().unwrap() >= Rational::new(1, 2));
        assert!(pair_coverage(&a).into_iter().all(|c| c <= 1));
        assert_ne!(a, generate_random_linear(100, Rational::new(1, 2), 2));
    }

    #[test]
    fn random_high_target_saturates_or_reaches() {
        let h = generate_random_linear(15, Rational::new(9, 10), 7);
        let d = h.linear_density().unwrap();
        assert!(d <= Rational::from_integer(1));
        if d < Rational::new(9, 10) {
            // Saturated: no insertable triple is left.
            let n = h.n() as u32;
            for a in 0..n {
                for b in (a + 1)..n {
                    for c in (b + 1)..n {
                        assert!(
                            h.covering_edge(a, b).is_some()
                                || h.covering_edge(a, c).is_some()
                                || h.covering_edge(b, c).is_some()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dilute_examples() {
        let fano = generate_steiner(7).unwrap();
        assert_eq!(dilute(&fano, Rational::from_integer(1), 5).unwrap(), fano);

        let sts9 = generate_steiner(9).unwrap();
        let thin = dilute(&sts9, Rational::new(5, 6), 3).unwrap();
        assert_eq!(thin.m(), 10);
        assert_eq!(thin.linear_density().unwrap(), Rational::new(5, 6));
        assert!(thin.edges().iter().all(|t| sts9.edges().contains(t)));

        let single = LinearTripleSystem::validate(3, &[[0, 1, 2]]).unwrap();
        assert!(matches!(
            dilute(&single, Rational::from_integer(2), 0),
            Err(Error::TargetAboveCurrent { .. })
        ));
        assert_eq!(dilute(&sts9, Rational::from_integer(0), 1).unwrap().m(), 0);
    }

    #[test]
    fn dilute_keeps_minimal_prefix() {
        let sts = generate_steiner(13).unwrap();
        let target = Rational::new(6, 7);
        let thin = dilute(&sts, target, 11).unwrap();
        let d = thin.linear_density().unwrap();
        assert!(d >= target);
        assert!(Rational::new(3 * (thin.m() as i128 - 1), 78) < target);
        assert_eq!(thin, dilute(&sts, target, 11).unwrap());
    }
}
