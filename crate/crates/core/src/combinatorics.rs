//! Strictly increasing index tuples in lexicographic order.

/// The `k`-subsets of `0..n` in lexicographic order, with O(k) ranking.
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    k: usize,
    binom: Vec<Vec<usize>>,
    list: Vec<Vec<usize>>,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        let mut binom = vec![vec![0usize; k + 1]; n + 1];
        for row in 0..=n {
            binom[row][0] = 1;
            for col in 1..=k.min(row) {
                binom[row][col] = binom[row - 1][col - 1] + binom[row - 1][col];
            }
        }
        let mut list = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for x in start..n {
                if n - x < k - cur.len() {
                    break;
                }
                cur.push(x);
                rec(x + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut list);
        Subsets { n, k, binom, list }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn get(&self, idx: usize) -> &[usize] {
        &self.list[idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.list.iter().map(Vec::as_slice)
    }

    fn choose(&self, a: usize, b: usize) -> usize {
        if b > a {
            0
        } else {
            self.binom[a][b]
        }
    }

    /// Lexicographic rank of a strictly increasing tuple.
    pub fn rank(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.k);
        let mut r = 0;
        let mut prev = 0;
        for (i, &c) in tuple.iter().enumerate() {
            for j in prev..c {
                r += self.choose(self.n - 1 - j, self.k - 1 - i);
            }
            prev = c + 1;
        }
        r
    }
}

/// Sort `tuple` in place; returns the sign of the sorting permutation, or 0 when
/// an index repeats.
pub fn sort_with_sign(tuple: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && tuple[j - 1] == tuple[j] {
            return 0;
        }
    }
    if tuple.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}
