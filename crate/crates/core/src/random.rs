//! Random diagram generators for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{parse_gauss, Diagram};

/// A uniformly random perfect matching of the `4n` ports. Such diagrams are
/// virtual in general and may have several components and free pieces.
pub fn random_virtual<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Diagram {
    let mut ports: Vec<usize> = (0..4 * n).collect();
    ports.shuffle(rng);
    let mut partner = vec![0; 4 * n];
    for pair in ports.chunks(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    let loops = usize::from(n == 0);
    Diagram::new(partner, loops).expect("a perfect matching is a diagram")
}

/// A random one-component virtual knot from a random signed Gauss code.
pub fn random_virtual_knot<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Diagram {
    let mut word: Vec<(usize, bool)> = (1..=n).flat_map(|c| [(c, true), (c, false)]).collect();
    word.shuffle(rng);
    let signs: Vec<bool> = (0..=n).map(|_| rng.random()).collect();
    let code: Vec<String> = word
        .iter()
        .map(|&(c, over)| format!("{}{c}{}", if over { 'O' } else { 'U' }, if signs[c] { '+' } else { '-' }))
        .collect();
    parse_gauss(&code.join(" ")).expect("a shuffled Gauss word is valid")
}

/// A random braid closure on `strands` strands with `n` letters, using
/// every generator so the diagram is connected.
pub fn random_classical<R: Rng + ?Sized>(rng: &mut R, strands: usize, n: usize) -> Diagram {
    assert!(strands >= 2 && n >= strands - 1, "need at least one letter per generator");
    loop {
        let word: Vec<i32> = (0..n)
            .map(|_| {
                let g = rng.random_range(1..strands as i32);
                if rng.random() { g } else { -g }
            })
            .collect();
        let used = (1..strands as i32).all(|g| word.iter().any(|l| l.abs() == g));
        if used {
            return Diagram::from_braid(strands, &word).expect("valid braid word");
        }
    }
}

/// Like [`random_virtual`] but resampled until the diagram is connected.
pub fn random_connected_virtual<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Diagram {
    loop {
        let d = random_virtual(rng, n);
        if d.connected_pieces() == 1 {
            return d;
        }
    }
}

/// A connected classical diagram with `n` crossings (`n ≥ 1`), with the
/// strand count drawn from what `n` allows.
pub fn random_classical_any<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Diagram {
    let strands = rng.random_range(2..=(n + 1).min(4));
    random_classical(rng, strands, n)
}
