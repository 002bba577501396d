/// Static 3-d tree for exact nearest-neighbor distance queries.
///
/// Points live in one array arranged so that each subrange `[lo, hi)` is
/// split at its midpoint on axis `depth % 3`.
pub struct KdTree {
    points: Vec<[f64; 3]>,
}

const LEAF: usize = 8;

impl KdTree {
    pub fn new(points: &[[f64; 3]]) -> Self {
        let mut points = points.to_vec();
        build(&mut points, 0);
        KdTree { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Squared distance from `q` to its nearest point; `inf` for an empty tree.
    pub fn nearest_dist2(&self, q: &[f64; 3]) -> f64 {
        let mut best = f64::INFINITY;
        self.search(q, 0, self.points.len(), 0, &mut best);
        best
    }

    fn search(&self, q: &[f64; 3], lo: usize, hi: usize, depth: usize, best: &mut f64) {
        if hi - lo <= LEAF {
            for p in &self.points[lo..hi] {
                *best = best.min(super::dist2(p, q));
            }
            return;
        }
        let mid = lo + (hi - lo) / 2;
        let axis = depth % 3;
        let p = &self.points[mid];
        *best = best.min(super::dist2(p, q));
        let diff = q[axis] - p[axis];
        let (near, far) = if diff < 0.0 {
            ((lo, mid), (mid + 1, hi))
        } else {
            ((mid + 1, hi), (lo, mid))
        };
        self.search(q, near.0, near.1, depth + 1, best);
        if diff * diff < *best {
            self.search(q, far.0, far.1, depth + 1, best);
        }
    }
}

fn build(points: &mut [[f64; 3]], depth: usize) {
    if points.len() <= LEAF {
        return;
    }
    let axis = depth % 3;
    let mid = points.len() / 2;
    points.select_nth_unstable_by(mid, |a, b| a[axis].total_cmp(&b[axis]));
    let (left, right) = points.split_at_mut(mid);
    build(left, depth + 1);
    build(&mut right[1..], depth + 1);
}
