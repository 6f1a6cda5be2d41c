use super::{Composition, SetComposition};

/// All interleavings of two sequences, with multiplicity.
pub fn shuffle_seqs<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut rest in shuffle_seqs(&a[1..], b) {
        rest.insert(0, a[0].clone());
        out.push(rest);
    }
    for mut rest in shuffle_seqs(a, &b[1..]) {
        rest.insert(0, b[0].clone());
        out.push(rest);
    }
    out
}

/// Shuffles plus the branch that merges both heads with `merge`.
pub fn quasi_shuffle_seqs<T: Clone>(a: &[T], b: &[T], merge: &impl Fn(&T, &T) -> T) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut rest in quasi_shuffle_seqs(&a[1..], b, merge) {
        rest.insert(0, a[0].clone());
        out.push(rest);
    }
    for mut rest in quasi_shuffle_seqs(a, &b[1..], merge) {
        rest.insert(0, b[0].clone());
        out.push(rest);
    }
    for mut rest in quasi_shuffle_seqs(&a[1..], &b[1..], merge) {
        rest.insert(0, merge(&a[0], &b[0]));
        out.push(rest);
    }
    out
}

pub fn shuffle(a: &Composition, b: &Composition) -> Vec<Composition> {
    shuffle_seqs(a.parts(), b.parts())
        .into_iter()
        .map(Composition::from_parts)
        .collect()
}

pub fn quasi_shuffle(a: &Composition, b: &Composition) -> Vec<Composition> {
    quasi_shuffle_seqs(a.parts(), b.parts(), &|x, y| x + y)
        .into_iter()
        .map(Composition::from_parts)
        .collect()
}

fn shifted_pair(phi: &SetComposition, psi: &SetComposition) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    (phi.blocks().to_vec(), psi.shift_up(phi.ground()))
}

/// Shuffles of `Φ` with `Ψ` shifted up by the ground size of `Φ`.
pub fn shifted_shuffle(phi: &SetComposition, psi: &SetComposition) -> Vec<SetComposition> {
    let n = phi.ground() + psi.ground();
    let (a, b) = shifted_pair(phi, psi);
    shuffle_seqs(&a, &b)
        .into_iter()
        .map(|blocks| SetComposition::from_sorted_blocks(blocks, n))
        .collect()
}

pub fn shifted_quasi_shuffle(phi: &SetComposition, psi: &SetComposition) -> Vec<SetComposition> {
    let n = phi.ground() + psi.ground();
    let (a, b) = shifted_pair(phi, psi);
    let union = |x: &Vec<u32>, y: &Vec<u32>| {
        let mut u: Vec<u32> = x.iter().chain(y).copied().collect();
        u.sort_unstable();
        u
    };
    quasi_shuffle_seqs(&a, &b, &union)
        .into_iter()
        .map(|blocks| SetComposition::from_sorted_blocks(blocks, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::from(p)
    }

    fn sc(blocks: &[&[u32]]) -> SetComposition {
        SetComposition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn quasi_shuffle_example() {
        let mut got = quasi_shuffle(&c(&[2, 3]), &c(&[1]));
        got.sort();
        let mut want = vec![
            c(&[2, 3, 1]),
            c(&[2, 1, 3]),
            c(&[2, 4]),
            c(&[1, 2, 3]),
            c(&[3, 3]),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn shuffle_basics() {
        assert_eq!(shuffle(&c(&[1]), &c(&[1])), vec![c(&[1, 1]), c(&[1, 1])]);
        assert_eq!(
            shuffle(&Composition::empty(), &c(&[2, 1])),
            vec![c(&[2, 1])]
        );
    }

    #[test]
    fn cardinalities() {
        for la in 0..=4usize {
            for lb in 0..=4usize {
                let a: Vec<u32> = (1..=la as u32).collect();
                let b: Vec<u32> = (1..=lb as u32).collect();
                assert_eq!(shuffle_seqs(&a, &b).len(), binom(la + lb, la));
                // words in {A, B, merged} with la-k A's, lb-k B's and k merged
                let expect: usize = (0..=la.min(lb))
                    .map(|k| binom(la + lb - k, k) * binom(la + lb - 2 * k, la - k))
                    .sum();
                assert_eq!(
                    quasi_shuffle_seqs(&a, &b, &|x, y| x + y).len(),
                    expect,
                    "{la} {lb}"
                );
            }
        }
    }

    #[test]
    fn shifted_examples() {
        let mut got = shifted_quasi_shuffle(&sc(&[&[1, 3], &[2]]), &sc(&[&[1, 2]]));
        got.sort();
        let mut want = vec![
            sc(&[&[1, 3], &[2], &[4, 5]]),
            sc(&[&[1, 3], &[4, 5], &[2]]),
            sc(&[&[4, 5], &[1, 3], &[2]]),
            sc(&[&[1, 3, 4, 5], &[2]]),
            sc(&[&[1, 3], &[2, 4, 5]]),
        ];
        want.sort();
        assert_eq!(got, want);
        let mut s = shifted_shuffle(&sc(&[&[1]]), &sc(&[&[1]]));
        s.sort();
        assert_eq!(s, vec![sc(&[&[1], &[2]]), sc(&[&[2], &[1]])]);
    }
}
