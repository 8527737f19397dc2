use sha2::{Digest, Sha256};

use super::MkCycle;

#[cfg(test)]
pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Start index of the least rotation of `s` (Booth).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut f = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = &s[j % n];
        let mut i = f[j - k - 1];
        while i != usize::MAX && *sj != s[(k + i + 1) % n] {
            if *sj < s[(k + i + 1) % n] {
                k = j - i - 1;
            }
            i = f[i];
        }
        if i == usize::MAX && *sj != s[(k + i.wrapping_add(1)) % n] {
            if *sj < s[k % n] {
                k = j;
            }
            f[j - k] = usize::MAX;
        } else {
            f[j - k] = i.wrapping_add(1);
        }
    }
    k % n
}

fn rotated<T: Clone>(s: &[T], at: usize) -> Vec<T> {
    s[at..].iter().chain(&s[..at]).cloned().collect()
}

/// Least representative of the cycle's edge-color sequence over rotation and
/// reflection, as a digit string.
pub fn cycle_signature(c: &MkCycle) -> String {
    let fwd: Vec<u8> = c.colors().iter().map(|x| x.0).collect();
    let rev: Vec<u8> = fwd.iter().rev().copied().collect();
    let a = rotated(&fwd, least_rotation(&fwd));
    let b = rotated(&rev, least_rotation(&rev));
    a.min(b)
        .into_iter()
        .map(|d| char::from_digit(d as u32, 36).unwrap_or('?'))
        .collect()
}

pub fn signature_hash(signature: &str) -> String {
    Sha256::digest(signature.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
