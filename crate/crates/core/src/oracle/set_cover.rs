use serde::{Deserialize, Serialize};

/// Can `budget` sets from `family` cover `{0, .., universe - 1}`?
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCover {
    pub universe: usize,
    pub family: Vec<Vec<usize>>,
    pub budget: usize,
}

/// Smallest-first search over subfamilies of size at most the budget.
/// Returns the indices of a cover, or `None`.
pub fn brute_force_set_cover(sc: &SetCover) -> Option<Vec<usize>> {
    assert!(sc.family.len() < 64 && sc.universe < 128, "brute force is for small inputs");
    let full: u128 = if sc.universe == 0 { 0 } else { u128::MAX >> (128 - sc.universe) };
    let masks: Vec<u128> = sc.family.iter().map(|set| set.iter().fold(0, |m, &x| m | 1 << x)).collect();
    let f = masks.len();
    let mut best: Option<Vec<usize>> = None;
    for choice in 0u64..(1 << f) {
        let size = choice.count_ones() as usize;
        if size > sc.budget || best.as_ref().is_some_and(|b| b.len() <= size) {
            continue;
        }
        let covered = (0..f).filter(|j| choice >> j & 1 == 1).fold(0, |m, j| m | masks[j]);
        if covered & full == full {
            best = Some((0..f).filter(|j| choice >> j & 1 == 1).collect());
        }
    }
    best
}
