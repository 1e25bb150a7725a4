use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use super::Perm;

/// A right action of permutations on some domain: `act(act(x, g), h) =
/// act(x, g·h)`.
pub trait Action {
    type Point: Clone + Eq + Hash + Ord;
    fn act(&self, x: &Self::Point, g: &Perm) -> Self::Point;
}

/// The natural action on points.
pub struct OnPoints;
/// The induced action on sets, represented as sorted point lists.
pub struct OnSets;
/// The induced action on ordered tuples.
pub struct OnTuples;

impl Action for OnPoints {
    type Point = usize;
    fn act(&self, x: &usize, g: &Perm) -> usize {
        g.apply(*x)
    }
}

impl Action for OnSets {
    type Point = Vec<usize>;
    fn act(&self, x: &Vec<usize>, g: &Perm) -> Vec<usize> {
        let mut v: Vec<usize> = x.iter().map(|&a| g.apply(a)).collect();
        v.sort_unstable();
        v
    }
}

impl Action for OnTuples {
    type Point = Vec<usize>;
    fn act(&self, x: &Vec<usize>, g: &Perm) -> Vec<usize> {
        x.iter().map(|&a| g.apply(a)).collect()
    }
}

/// Closure of `{seed}` under the generators, sorted.
pub fn orbit<A: Action>(gens: &[Perm], seed: &A::Point, action: &A) -> Vec<A::Point> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(seed.clone());
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = action.act(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// Orbit in discovery order together with a transversal: `reps[i]` maps the
/// seed to `points[i]`.
pub fn orbit_with_transversal<A: Action>(
    gens: &[Perm],
    degree: usize,
    seed: &A::Point,
    action: &A,
    limit: u64,
) -> Option<(Vec<A::Point>, Vec<Perm>, HashMap<A::Point, usize>)> {
    let mut points = vec![seed.clone()];
    let mut reps = vec![Perm::identity(degree)];
    let mut index = HashMap::from([(seed.clone(), 0usize)]);
    let mut head = 0;
    while head < points.len() {
        let x = points[head].clone();
        for g in gens {
            let y = action.act(&x, g);
            if !index.contains_key(&y) {
                if points.len() as u64 >= limit {
                    return None;
                }
                index.insert(y.clone(), points.len());
                reps.push(reps[head].compose(g));
                points.push(y);
            }
        }
        head += 1;
    }
    Some((points, reps, index))
}
