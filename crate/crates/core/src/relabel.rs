//! Order-preserving relabelings used when an element (or a `±` pair) is
//! deleted from a poset or a permutation.
//!
//! All sign bookkeeping for the restriction maps lives here.

/// Label after deleting `removed` from `1..=n`: labels above it shift down.
pub fn compress(x: usize, removed: usize) -> usize {
    debug_assert_ne!(x, removed);
    if x > removed {
        x - 1
    } else {
        x
    }
}

/// Inverse of [`compress`].
pub fn expand(x: usize, removed: usize) -> usize {
    if x >= removed {
        x + 1
    } else {
        x
    }
}

/// Signed label after deleting `±removed` from `±[n]`; acts on `|x|`.
pub fn compress_signed(x: i32, removed: i32) -> i32 {
    let r = removed.abs();
    debug_assert_ne!(x.abs(), r);
    if x.abs() > r {
        x - x.signum()
    } else {
        x
    }
}

/// Inverse of [`compress_signed`].
pub fn expand_signed(x: i32, removed: i32) -> i32 {
    let r = removed.abs();
    if x.abs() >= r {
        x + x.signum()
    } else {
        x
    }
}

/// Restriction of a one-line permutation to the positions whose value is
/// not `value`, relabelled to a permutation of `1..n`.
pub fn restrict_one_line(line: &[usize], value: usize) -> Vec<usize> {
    line.iter().filter(|&&x| x != value).map(|&x| compress(x, value)).collect()
}

/// Signed analog of [`restrict_one_line`]: drops the position holding
/// `±value` and relabels the remaining values.
pub fn restrict_signed_one_line(line: &[i32], value: i32) -> Vec<i32> {
    line.iter()
        .filter(|&&x| x.abs() != value.abs())
        .map(|&x| compress_signed(x, value))
        .collect()
}
