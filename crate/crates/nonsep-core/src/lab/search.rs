//! Stochastic search for large covering ratios: hill climbing over member
//! translations and ratios with a non-separability feasibility filter.
//! Evidence gathering only; no optimality claim is attached to the result.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::LabError;
use crate::covering::smallest_covering_homothet;
use crate::geom::{v2, ConvexPolygon, Vec2};
use crate::scene::{Homothet, ReferenceBody, Scene};

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub scene: Scene,
    pub lambda: f64,
    pub evaluations: usize,
    pub accepted: usize,
}

/// Hill climbing with several independent chains. Each chain starts from
/// a seeded random non-separable family and proposes translation jitter,
/// ratio scaling, or a radial stretch about the weighted center; a
/// proposal is accepted when it stays non-separable and increases the
/// covering functional. Deterministic for a fixed seed.
pub fn search_sup_lambda(
    reference: ConvexPolygon,
    n_members: usize,
    iterations: usize,
    seed: u64,
) -> Result<SearchOutcome, LabError> {
    if n_members < 3 {
        return Err(LabError::PreconditionFailed(format!(
            "search needs at least 3 members, got {n_members}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chains = 12usize;
    let per_chain = iterations.max(chains) / chains;
    let mut evaluations = 0usize;
    let mut accepted = 0usize;
    let mut best: Option<(Vec<Homothet>, f64)> = None;

    let evaluate = |members: &[Homothet], evals: &mut usize| -> Option<f64> {
        *evals += 1;
        let scene = Scene::new(
            2,
            "search",
            ReferenceBody::Polygon(reference.clone()),
            members.to_vec(),
        )
        .ok()?;
        let cert = crate::separation::is_nonseparable_sweep(&scene).ok()?;
        if cert.is_separable() {
            return None;
        }
        smallest_covering_homothet(&scene).ok().map(|r| r.lambda)
    };

    for _ in 0..chains {
        let mut members = random_ns_members(&reference, n_members, &mut rng);
        let mut current = loop {
            match evaluate(&members, &mut evaluations) {
                Some(v) => break v,
                None => members = random_ns_members(&reference, n_members, &mut rng),
            }
        };
        if best.as_ref().map_or(true, |(_, b)| current > *b) {
            best = Some((members.clone(), current));
        }
        for step in 0..per_chain {
            let progress = step as f64 / per_chain.max(1) as f64;
            let sigma = 0.6 * libm::pow(0.02, progress);
            // Annealed acceptance temperature: early on, mildly worse
            // states are accepted so the chain can switch tangency
            // structures; late, the walk is effectively greedy.
            let temperature = 0.02 * libm::pow(5e-4, progress);
            let mut proposal = members.clone();
            match rng.gen_range(0..10) {
                0..=5 => {
                    let m = rng.gen_range(0..n_members);
                    let dx = rng.gen_range(-sigma..sigma);
                    let dy = rng.gen_range(-sigma..sigma);
                    proposal[m] =
                        Homothet::new2(proposal[m].xy() + v2(dx, dy), proposal[m].ratio);
                }
                6..=7 => {
                    let m = rng.gen_range(0..n_members);
                    let f = libm::exp(rng.gen_range(-0.3 * sigma..0.3 * sigma));
                    let tau = (proposal[m].ratio * f).max(0.05);
                    proposal[m] = Homothet::new2(proposal[m].xy(), tau);
                }
                _ => {
                    // Radial stretch about the ratio-weighted center.
                    let total: f64 = proposal.iter().map(|m| m.ratio).sum();
                    let mut c = Vec2::ZERO;
                    for m in proposal.iter() {
                        c = c + (m.ratio / total) * m.xy();
                    }
                    let f = 1.0 + rng.gen_range(0.0..0.5 * sigma);
                    for m in proposal.iter_mut() {
                        *m = Homothet::new2(c + f * (m.xy() - c), m.ratio);
                    }
                }
            }
            if let Some(v) = evaluate(&proposal, &mut evaluations) {
                let take = if v > current {
                    true
                } else {
                    let u: f64 = rng.gen_range(0.0..1.0);
                    libm::exp((v - current) / temperature) > u
                };
                if take {
                    current = v;
                    members = proposal;
                    accepted += 1;
                    if best.as_ref().map_or(true, |(_, b)| current > *b) {
                        best = Some((members.clone(), current));
                    }
                }
            }
        }
    }

    // Simplex (Nelder-Mead) refinement of the best chain state over
    // translations and log-ratios; the curved non-separability boundary
    // defeats coordinate-wise moves, while a deforming simplex tracks it.
    let (mut members, mut lambda) = best.expect("at least one feasible start");
    for scale in [0.08, 0.02, 0.004] {
        let start = pack(&members);
        let (params, value) =
            nelder_mead(&start, scale, 4000, &mut evaluations, |p, evals| {
                evaluate(&unpack(p), evals).map(|v| -v)
            });
        if -value > lambda {
            lambda = -value;
            members = unpack(&params);
            accepted += 1;
        }
    }

    let scene = Scene::new(2, "search-best", ReferenceBody::Polygon(reference), members)
        .expect("accepted members are valid");
    Ok(SearchOutcome {
        scene,
        lambda,
        evaluations,
        accepted,
    })
}

fn pack(members: &[Homothet]) -> Vec<f64> {
    let mut p = Vec::with_capacity(3 * members.len());
    for m in members {
        p.push(m.xy().x);
        p.push(m.xy().y);
        p.push(libm::log(m.ratio));
    }
    p
}

fn unpack(p: &[f64]) -> Vec<Homothet> {
    p.chunks(3)
        .map(|c| Homothet::new2(v2(c[0], c[1]), libm::exp(c[2])))
        .collect()
}

/// Minimizes `f` with a Nelder-Mead simplex; infeasible points (`None`)
/// act as a large penalty so the simplex contracts away from them.
fn nelder_mead(
    start: &[f64],
    scale: f64,
    max_evals: usize,
    evaluations: &mut usize,
    f: impl Fn(&[f64], &mut usize) -> Option<f64>,
) -> (Vec<f64>, f64) {
    const BIG: f64 = 1e9;
    let n = start.len();
    let eval = |p: &[f64], evals: &mut usize| f(p, evals).unwrap_or(BIG);
    let mut used = 0usize;
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((start.to_vec(), eval(start, evaluations)));
    for k in 0..n {
        let mut p = start.to_vec();
        p[k] += scale;
        let v = eval(&p, evaluations);
        simplex.push((p, v));
    }
    while used < max_evals {
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite values"));
        let diam: f64 = (1..=n)
            .map(|i| {
                simplex[i]
                    .0
                    .iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
            })
            .fold(0.0_f64, f64::max);
        if libm::sqrt(diam) < 1e-9 {
            break;
        }
        let mut centroid = alloc::vec![0.0; n];
        for s in &simplex[..n] {
            for k in 0..n {
                centroid[k] += s.0[k] / n as f64;
            }
        }
        let worst = simplex[n].clone();
        let lerp = |t: f64| -> Vec<f64> {
            (0..n)
                .map(|k| centroid[k] + t * (worst.0[k] - centroid[k]))
                .collect()
        };
        let reflected = lerp(-1.0);
        let fr = eval(&reflected, evaluations);
        used += 1;
        if fr < simplex[0].1 {
            let expanded = lerp(-2.0);
            let fe = eval(&expanded, evaluations);
            used += 1;
            simplex[n] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            let contracted = if fr < worst.1 { lerp(-0.5) } else { lerp(0.5) };
            let fc = eval(&contracted, evaluations);
            used += 1;
            if fc < worst.1.min(fr) {
                simplex[n] = (contracted, fc);
            } else {
                // Shrink toward the best vertex.
                let best = simplex[0].0.clone();
                for s in simplex.iter_mut().skip(1) {
                    for k in 0..n {
                        s.0[k] = best[k] + 0.5 * (s.0[k] - best[k]);
                    }
                    s.1 = eval(&s.0, evaluations);
                    used += 1;
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite values"));
    simplex[0].clone()
}

/// Random overlap-connected members (always non-separable).
fn random_ns_members(
    reference: &ConvexPolygon,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Homothet> {
    let radius = reference
        .vertices()
        .iter()
        .map(|v| v.norm())
        .fold(0.0_f64, f64::max);
    let mut members = Vec::with_capacity(n);
    members.push(Homothet::new2(Vec2::ZERO, 1.0));
    for _ in 1..n {
        let anchor: usize = rng.gen_range(0..members.len());
        let theta = rng.gen_range(0.0..core::f64::consts::TAU);
        let alpha: f64 = rng.gen_range(0.3..0.9);
        let a = members[anchor];
        let step = alpha * (a.ratio + 1.0) * radius;
        let u = v2(libm::cos(theta), libm::sin(theta));
        members.push(Homothet::new2(a.xy() + step * u, 1.0));
    }
    members
}
