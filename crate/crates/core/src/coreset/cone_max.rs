use super::cones::CanonicalCones;
use super::reach::ReachInterval;

/// Best item of a cone: `(point index, weight)`.
pub type ConeBest = Option<(usize, f64)>;

fn better(a: (usize, f64), b: ConeBest) -> bool {
    match b {
        None => true,
        Some(b) => a.1 > b.1 || (a.1 == b.1 && a.0 < b.0),
    }
}

/// Segment tree over the cones; every interval is recorded at the
/// `O(log k)` canonical nodes covering its cone range, then maxima are
/// pushed down to the leaves.
#[derive(Clone, Debug)]
struct ConeMaxTree {
    size: usize,
    node: Vec<ConeBest>,
}

impl ConeMaxTree {
    fn new(k: usize) -> Self {
        let size = k.next_power_of_two();
        ConeMaxTree {
            size,
            node: vec![None; 2 * size],
        }
    }

    fn insert(&mut self, lo: usize, hi: usize, item: (usize, f64)) {
        let (mut l, mut r) = (lo + self.size, hi + self.size + 1);
        while l < r {
            if l & 1 == 1 {
                self.offer(l, item);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                self.offer(r, item);
            }
            l >>= 1;
            r >>= 1;
        }
    }

    fn offer(&mut self, v: usize, item: (usize, f64)) {
        if better(item, self.node[v]) {
            self.node[v] = Some(item);
        }
    }

    fn leaves(mut self, k: usize) -> Vec<ConeBest> {
        for v in 2..2 * self.size {
            if let Some(item) = self.node[v / 2] {
                self.offer(v, item);
            }
        }
        self.node[self.size..self.size + k].to_vec()
    }
}

/// For every cone, the heaviest interval meeting it (smaller point index on
/// equal weight).
pub fn cone_max(cones: &CanonicalCones, items: &[ReachInterval]) -> Vec<ConeBest> {
    let mut tree = ConeMaxTree::new(cones.len());
    for it in items {
        for (lo, hi) in it.arc.to_intervals() {
            let (first, last, extra) = cones.range_for(lo, hi);
            if first <= last {
                tree.insert(first, last, (it.point, it.weight));
            }
            if let Some(j) = extra {
                tree.insert(j, j, (it.point, it.weight));
            }
        }
    }
    tree.leaves(cones.len())
}

/// Quadratic reference for [`cone_max`].
pub fn cone_max_brute(cones: &CanonicalCones, items: &[ReachInterval]) -> Vec<ConeBest> {
    (0..cones.len())
        .map(|j| {
            let mut best = None;
            for it in items {
                let hit = it.arc.to_intervals().iter().any(|&(lo, hi)| cones.meets(j, lo, hi));
                if hit && better((it.point, it.weight), best) {
                    best = Some((it.point, it.weight));
                }
            }
            best
        })
        .collect()
}
