//! Koszul signs for permuting homogeneous tensor factors.
//!
//! Every formula with crossing strands is entered as a permutation of
//! homogeneous factors; the sign is (−1) to the number of crossings between
//! two odd strands.

/// Sign of reordering factors with the given parities into `order`.
///
/// `order[k]` is the original position of the factor placed at position `k`.
pub fn permutation_sign(parities: &[u8], order: &[usize]) -> i8 {
    debug_assert_eq!(parities.len(), order.len());
    let mut odd_crossings = 0usize;
    for a in 0..order.len() {
        if parities[order[a]] & 1 == 0 {
            continue;
        }
        for b in a + 1..order.len() {
            if parities[order[b]] & 1 == 1 && order[b] < order[a] {
                odd_crossings += 1;
            }
        }
    }
    if odd_crossings % 2 == 0 {
        1
    } else {
        -1
    }
}

/// (−1)^{p·q} for two parities.
pub fn swap_sign(p: u8, q: u8) -> i8 {
    if p & q & 1 == 1 {
        -1
    } else {
        1
    }
}

/// Number of inversions in a sequence of sortable keys.
pub fn inversions<T: Ord>(seq: &[T]) -> usize {
    let mut n = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                n += 1;
            }
        }
    }
    n
}
