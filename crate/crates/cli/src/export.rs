//! Canonical text form of a presentation.

use lgcone_core::exactla::{Matrix, Rational};
use lgcone_core::exterior::{Form, LieAlgebra, Manifold};
use num::Zero;

use crate::parse::Presentation;

fn form(f: &Form<Rational>, names: &[String]) -> String {
    f.display(names)
}

/// Canonical file text: every differential, every column of `J`, and the
/// metrics, with a Salamon-notation comment.
pub fn canonical(
    name: &str,
    names: &[String],
    de: &[Form<Rational>],
    j: &Matrix<Rational>,
    metrics: &[(String, Form<Rational>)],
) -> String {
    let mut out = String::new();
    let salamon = LieAlgebra::new(name, names.to_vec(), de.to_vec())
        .map(|g| g.salamon())
        .unwrap_or_default();
    out.push_str(&format!("# salamon: {salamon}\n"));
    out.push_str(&format!("algebra {name}\n"));
    out.push_str(&format!("dim {}\n", names.len()));
    out.push_str(&format!("basis {}\n", names.join(" ")));
    for (g, f) in names.iter().zip(de) {
        out.push_str(&format!("d {g} = {}\n", form(f, names)));
    }
    let ngens = names.len();
    let entries: Vec<String> = (0..ngens)
        .map(|k| {
            let col: Vec<Rational> = (0..ngens).map(|i| j[(i, k)].clone()).collect();
            let img = if col.iter().all(Zero::is_zero) {
                "0".to_string()
            } else {
                form(&Form::from_vector(ngens, 1, &col), names)
            };
            format!("{} -> {}", names[k], img)
        })
        .collect();
    out.push_str(&format!("J: {}\n", entries.join(", ")));
    for (label, omega) in metrics {
        out.push_str(&format!("metric {label} = {}\n", form(omega, names)));
    }
    out
}

pub fn presentation(p: &Presentation) -> String {
    canonical(&p.name, &p.names, &p.de, &p.j, &p.metrics)
}

pub fn manifold(m: &Manifold, metrics: &[(String, Form<Rational>)]) -> String {
    let g = m.algebra();
    canonical(g.name(), m.names(), g.structure(), m.j(), metrics)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn canonical_lists_every_column_and_reparses() {
        let src = "algebra x\nbasis a b\nd b = -1*a^b\nd a = 0\nJ: a -> b\nmetric m = 2 a^b\n";
        let p = parse(src).unwrap();
        let text = presentation(&p);
        assert_eq!(
            text,
            "# salamon: (0,-12)\nalgebra x\ndim 2\nbasis a b\nd a = 0\nd b = -a^b\nJ: a -> b, b -> -a\nmetric m = 2 a^b\n"
        );
        assert_eq!(presentation(&parse(&text).unwrap()), text);
    }

    #[test]
    fn zero_columns_are_written_as_zero() {
        let names: Vec<String> = vec!["a".into(), "b".into()];
        let de = vec![Form::zero(2), Form::zero(2)];
        let text = canonical("z", &names, &de, &Matrix::zeros(2, 2), &[]);
        assert!(text.contains("J: a -> 0, b -> 0\n"));
    }
}
