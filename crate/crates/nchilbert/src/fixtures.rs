//! Named example inputs used by the test suites, the CLI examples and the
//! browser demo.

use crate::words::{Alphabet, Word};

/// The alphabet {x, y, z}.
pub fn grassmann_alphabet() -> Alphabet {
    Alphabet::new(["x", "y", "z"]).unwrap()
}

/// Leading-monomial generators of the relatively free algebra of the
/// exterior algebra in three variables: thirteen sporadic generators plus
/// the family `yz y^d xy, yz y^d xz` (`d >= 0`), listed up to total degree
/// `max_degree`.
pub fn grassmann_generators(max_degree: u32) -> Vec<Word> {
    let (x, y, z) = (0u16, 1u16, 2u16);
    let mut gens: Vec<Vec<u16>> = vec![
        vec![x, x, y],
        vec![x, x, z],
        vec![x, y, y],
        vec![x, y, z],
        vec![x, z, y],
        vec![x, z, z],
        vec![y, y, z],
        vec![y, z, z],
        vec![x, y, x, y],
        vec![x, y, x, z],
        vec![x, z, x, y],
        vec![x, z, x, z],
        vec![y, z, y, z],
    ];
    let mut d = 0;
    while d + 4 <= max_degree {
        for last in [y, z] {
            let mut word = vec![y, z];
            word.extend(std::iter::repeat_n(y, d as usize));
            word.push(x);
            word.push(last);
            gens.push(word);
        }
        d += 1;
    }
    gens.into_iter().map(Word::from_letters).collect()
}

/// The same generators rendered in the text input format.
pub fn grassmann_input_text(max_degree: u32) -> String {
    let alphabet = grassmann_alphabet();
    let mut out =
        String::from("# relatively free algebra of the exterior algebra, n = 3\nvars x y z\n");
    for gen in grassmann_generators(max_degree) {
        let names: Vec<&str> = gen.letters().iter().map(|&l| alphabet.name(l)).collect();
        out.push_str(&names.join("*"));
        out.push('\n');
    }
    out
}

/// `<x^2>` over {x, y}: the algebra whose graded dimensions are the
/// Fibonacci numbers.
pub fn fibonacci_input_text() -> String {
    "# monomial algebra with Fibonacci growth\nvars x y\nx*x\n".to_string()
}
