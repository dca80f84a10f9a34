//! Permutation helpers: validation, cycle structure, parity, Lehmer ranking,
//! and lexicographic enumeration.

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Cycle decomposition; each cycle starts at its smallest element, cycles
/// ordered by that element.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push(cyc);
    }
    out
}

pub fn cycle_count(p: &[usize]) -> usize {
    cycles(p).len()
}

/// True iff `p` is an even permutation.
pub fn is_even(p: &[usize]) -> bool {
    (p.len() - cycle_count(p)) % 2 == 0
}

/// Number of inversions, i.e. pairs `i < j` with `p[i] > p[j]`.
pub fn inversions(p: &[usize]) -> u64 {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// Lehmer-code rank of a permutation. Collision-free for n <= 20
/// (20! < 2^62).
pub fn lehmer_rank(p: &[usize]) -> u64 {
    debug_assert!(p.len() <= 20);
    let n = p.len();
    let mut rank: u64 = 0;
    // seen[i] marks values already consumed; count of smaller unseen values
    // gives the factorial digit.
    let mut seen = vec![false; n];
    for (i, &x) in p.iter().enumerate() {
        let smaller = (0..x).filter(|&y| !seen[y]).count() as u64;
        rank = rank * (n - i) as u64 + smaller;
        seen[x] = true;
    }
    rank
}

/// Advance `p` to the next permutation in lexicographic order. Returns false
/// (leaving `p` sorted) after the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.sort_unstable();
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Visit every permutation of `0..n` in lexicographic order until the visitor
/// returns true; reports whether the visitor ever did.
pub fn any_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if visit(&p) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}
