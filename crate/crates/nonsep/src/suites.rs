//! Randomized verification suites behind `nonsep verify`: seeded scene
//! batches checked against the covering bounds, with deterministic
//! aggregation independent of worker scheduling.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nonsep_core::covering::{goodman_cover_symmetric, interval_cover_1d};
use nonsep_core::geom::{ConvexPolygon, Dir2};
use nonsep_core::lab::{cover_with_ratio_d, verify_kip_theorem, verify_strictly_convex, verify_width_lemma};
use nonsep_core::scene::generators::{
    gen_nested_family, gen_random_ns_family, gen_touching_chain,
};
use nonsep_core::scene::ReferenceBody;

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Worker cap: the `NONSEP_THREADS` environment variable, else the
/// available parallelism.
pub fn thread_cap() -> usize {
    std::env::var("NONSEP_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Runs `f` over `0..count` on up to `threads` workers; results come back
/// indexed, so the outcome does not depend on scheduling.
fn parallel_map<T: Send>(
    count: usize,
    threads: usize,
    f: impl Fn(usize) -> T + Sync,
) -> Vec<T> {
    let workers = threads.clamp(1, count.max(1));
    let mut results: Vec<Option<T>> = (0..count).map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots = std::sync::Mutex::new(&mut results);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let value = f(i);
                let mut guard = slots.lock().expect("no panics while holding the lock");
                guard[i] = Some(value);
            });
        }
    });
    results
        .into_iter()
        .map(|v| v.expect("every index computed"))
        .collect()
}

fn report(name: &str, outcomes: Vec<Result<(), String>>) -> SuiteReport {
    let mut passed = 0;
    let mut failures = Vec::new();
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Ok(()) => passed += 1,
            Err(m) => failures.push(format!("case {i}: {m}")),
        }
    }
    SuiteReport {
        name: name.to_string(),
        passed,
        failed: failures.len(),
        failures,
    }
}

fn symmetric_reference(i: usize) -> ReferenceBody {
    match i % 3 {
        0 => ReferenceBody::Ball,
        1 => ReferenceBody::Polygon(ConvexPolygon::unit_square()),
        _ => ReferenceBody::Polygon(ConvexPolygon::unit_hexagon()),
    }
}

/// Width bound on random non-separable scenes of mixed references.
pub fn suite_width_bound(seed: u64, count: usize, threads: usize) -> SuiteReport {
    let outcomes = parallel_map(count, threads, |i| {
        let reference = match i % 3 {
            0 => ReferenceBody::Ball,
            1 => ReferenceBody::Polygon(ConvexPolygon::unit_square()),
            _ => ReferenceBody::Polygon(ConvexPolygon::unit_triangle()),
        };
        let n = 3 + i % 5;
        let scene = gen_random_ns_family(reference, n, seed.wrapping_add(i as u64))
            .map_err(|e| e.to_string())?;
        let rep = verify_width_lemma(&scene, 360).map_err(|e| e.to_string())?;
        if rep.max_ratio <= 1.0 + 1e-9 {
            Ok(())
        } else {
            Err(format!("width ratio {}", rep.max_ratio))
        }
    });
    report("width bound on non-separable scenes", outcomes)
}

/// Weighted-center interval covering on random connected unions,
/// cross-checked against brute-force endpoints.
pub fn suite_interval_cover(seed: u64, count: usize, threads: usize) -> SuiteReport {
    let outcomes = parallel_map(count, threads, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let n = 2 + (i % 9);
        let mut items: Vec<(f64, f64)> = Vec::with_capacity(n);
        let tau0 = rng.gen_range(0.1..2.0);
        items.push((rng.gen_range(-3.0..3.0), tau0));
        let mut hi = items[0].0 + tau0;
        for _ in 1..n {
            let tau = rng.gen_range(0.1..2.0);
            // Keep the union connected: the next interval starts at or
            // before the current right endpoint.
            let x = hi + rng.gen_range(-1.0..0.999) * tau;
            items.push((x, tau));
            hi = hi.max(x + tau);
        }
        let (center, radius) = interval_cover_1d(&items).map_err(|e| e.to_string())?;
        let lo = items
            .iter()
            .map(|&(x, t)| x - t)
            .fold(f64::MAX, f64::min);
        let hi = items
            .iter()
            .map(|&(x, t)| x + t)
            .fold(f64::MIN, f64::max);
        if center - radius > lo + 1e-12 || center + radius < hi - 1e-12 {
            return Err(format!(
                "cover [{}, {}] misses union [{lo}, {hi}]",
                center - radius,
                center + radius
            ));
        }
        // Sharpened left-endpoint bound: after shifting the union to start
        // at zero, the weighted center is at most the radius.
        if center - lo > radius + 1e-12 {
            return Err(format!("normalized center {} exceeds {}", center - lo, radius));
        }
        Ok(())
    });
    report("weighted-center interval covering", outcomes)
}

/// Dimension-factor covering construction on random non-separable
/// triangle scenes.
pub fn suite_ratio_d(seed: u64, count: usize, threads: usize) -> SuiteReport {
    let outcomes = parallel_map(count, threads, |i| {
        let n = 3 + i % 6;
        let scene = gen_random_ns_family(
            ReferenceBody::Polygon(ConvexPolygon::unit_triangle()),
            n,
            seed.wrapping_add(i as u64),
        )
        .map_err(|e| e.to_string())?;
        let res = cover_with_ratio_d(&scene).map_err(|e| e.to_string())?;
        let bound = res.ratio / scene.ratio_sum();
        if bound <= 2.0 + 1e-9 {
            Ok(())
        } else {
            Err(format!("bound {bound} exceeds the dimension"))
        }
    });
    report("dimension-factor covering construction", outcomes)
}

/// Weighted-center covering for origin-symmetric references on random
/// non-separable scenes (disk, square, hexagon in rotation).
pub fn suite_symmetric_cover(seed: u64, count: usize, threads: usize) -> SuiteReport {
    let outcomes = parallel_map(count, threads, |i| {
        let reference = symmetric_reference(i);
        let n = 2 + i % 7;
        let scene = gen_random_ns_family(reference, n, seed.wrapping_add(i as u64))
            .map_err(|e| e.to_string())?;
        let res = goodman_cover_symmetric(&scene).map_err(|e| e.to_string())?;
        if res.slack <= 1e-9 {
            Ok(())
        } else {
            Err(format!("containment slack {}", res.slack))
        }
    });
    report("weighted-center symmetric covering", outcomes)
}

/// Point-impassable polygon scenes: hull-summand property plus covering
/// functional at most 1. Mixes nested families with equal-ratio touching
/// square chains.
pub fn suite_impassable_polygons(seed: u64, count: usize, threads: usize) -> SuiteReport {
    let outcomes = parallel_map(count, threads, |i| {
        let scene = if i % 4 == 3 {
            let len = 2 + i % 4;
            gen_touching_chain(
                ReferenceBody::Polygon(ConvexPolygon::unit_square()),
                &vec![1.0; len],
                Dir2::from_angle(0.0),
            )
            .map_err(|e| e.to_string())?
        } else {
            let reference = match i % 3 {
                0 => ReferenceBody::Polygon(ConvexPolygon::unit_triangle()),
                1 => ReferenceBody::Polygon(ConvexPolygon::unit_square()),
                _ => ReferenceBody::Polygon(ConvexPolygon::unit_hexagon()),
            };
            gen_nested_family(reference, 2 + i % 6, seed.wrapping_add(i as u64))
                .map_err(|e| e.to_string())?
        };
        let rep = verify_kip_theorem(&scene).map_err(|e| e.to_string())?;
        if rep.summand && rep.lambda <= 1.0 + 1e-9 {
            Ok(())
        } else {
            Err(format!("summand {}, lambda {}", rep.summand, rep.lambda))
        }
    });
    report("point-impassable polygon covering", outcomes)
}

/// Point-impassable disk scenes: the union must be the dominant member.
pub fn suite_impassable_disks(seed: u64, count: usize, threads: usize) -> SuiteReport {
    let outcomes = parallel_map(count, threads, |i| {
        let scene = gen_nested_family(ReferenceBody::Ball, 2 + i % 8, seed.wrapping_add(i as u64))
            .map_err(|e| e.to_string())?;
        let rep = verify_strictly_convex(&scene).map_err(|e| e.to_string())?;
        if rep.max_violation <= 1e-9 {
            Ok(())
        } else {
            Err(format!("violation {}", rep.max_violation))
        }
    });
    report("point-impassable disk families", outcomes)
}

/// Runs the named suite (or all of them).
pub fn run_suites(which: &str, seed: u64, count: usize, threads: usize) -> Option<Vec<SuiteReport>> {
    let all = [
        ("lemma1", suite_width_bound as fn(u64, usize, usize) -> SuiteReport),
        ("lemma3", suite_interval_cover),
        ("thm4", suite_ratio_d),
        ("thm5", suite_symmetric_cover),
        ("thm6", suite_impassable_polygons),
        ("thm7", suite_impassable_disks),
    ];
    if which == "all" {
        return Some(all.iter().map(|(_, f)| f(seed, count, threads)).collect());
    }
    all.iter()
        .find(|(name, _)| *name == which)
        .map(|(_, f)| vec![f(seed, count, threads)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_batches_pass() {
        for which in ["lemma1", "lemma3", "thm4", "thm5", "thm6", "thm7"] {
            let reports = run_suites(which, 13, 8, 2).unwrap();
            for r in &reports {
                assert!(r.ok(), "{which}: {:?}", r.failures);
            }
        }
        assert!(run_suites("nope", 0, 1, 1).is_none());
    }
}
