//! Index-set combinatorics shared by the wedge-basis constructions.

/// All `k`-subsets of `{0, .., n-1}` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Sort `elem`, sitting at wedge slot `slot` among the (sorted) `others`,
/// into place. Returns the sorted index set and the sign of the permutation,
/// or `None` when `elem` already occurs (repeated wedge factor).
pub(crate) fn insert_with_sign(
    elem: usize,
    others: &[usize],
    slot: usize,
) -> Option<(Vec<usize>, i8)> {
    if others.contains(&elem) {
        return None;
    }
    let pos = others.iter().filter(|&&u| u < elem).count();
    let swaps = slot.abs_diff(pos);
    let mut sorted = Vec::with_capacity(others.len() + 1);
    sorted.extend_from_slice(&others[..pos]);
    sorted.push(elem);
    sorted.extend_from_slice(&others[pos..]);
    Some((sorted, if swaps % 2 == 0 { 1 } else { -1 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(4, 2).len(), 6);
    }

    #[test]
    fn insertion_signs() {
        // e2 at slot 0 of (e2, e1) -> -(e1, e2).
        assert_eq!(insert_with_sign(2, &[1], 0), Some((vec![1, 2], -1)));
        // Already in place.
        assert_eq!(insert_with_sign(0, &[1, 2], 0), Some((vec![0, 1, 2], 1)));
        // Repeated factor dies.
        assert_eq!(insert_with_sign(1, &[1], 0), None);
        // Two swaps: e0 from slot 2 to slot 0.
        assert_eq!(insert_with_sign(0, &[1, 2], 2), Some((vec![0, 1, 2], 1)));
        // One swap: e1 from slot 2 to slot 1.
        assert_eq!(insert_with_sign(1, &[0, 2], 2), Some((vec![0, 1, 2], -1)));
    }
}
