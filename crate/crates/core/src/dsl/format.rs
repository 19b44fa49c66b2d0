use crate::ncalg::{NCExpr, Word};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// Re-parseable ASCII.
    Canonical,
    Latex,
}

fn latex_generator(name: &str) -> String {
    match name {
        "Kinv" => "K^{-1}".into(),
        "Yinv" => "Y^{-1}".into(),
        "yinv" => "y^{-1}".into(),
        "wy" => "\\omega_y".into(),
        "kappa" => "\\kappa".into(),
        "kappainv" => "\\kappa^{-1}".into(),
        _ => {
            if let Some(base) = name.strip_suffix('+') {
                format!("{base}_{{+}}")
            } else if let Some(base) = name.strip_suffix('-') {
                format!("{base}_{{-}}")
            } else if name.len() == 2 && name.as_bytes()[1].is_ascii_digit() {
                format!("{}_{}", &name[..1], &name[1..])
            } else {
                name.to_string()
            }
        }
    }
}

/// Word text with runs of equal letters compressed to powers.
fn word_text(e: &NCExpr, w: &Word, style: Style) -> String {
    let alpha = e.alphabet();
    let letters = w.letters();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let g = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == g {
            j += 1;
        }
        let run = j - i;
        let name = alpha.name_of(g);
        parts.push(match (style, run) {
            (Style::Canonical, 1) => name.to_string(),
            (Style::Canonical, n) => format!("{name}^{n}"),
            (Style::Latex, 1) => latex_generator(name),
            (Style::Latex, n) => {
                let l = latex_generator(name);
                if l.contains('^') {
                    format!("\\left({l}\\right)^{{{n}}}")
                } else {
                    format!("{l}^{{{n}}}")
                }
            }
        });
        i = j;
    }
    match style {
        Style::Canonical => parts.join("*"),
        Style::Latex => parts.join(" "),
    }
}

fn scalar_text(c: &Scalar, style: Style) -> String {
    match style {
        Style::Canonical => c.to_string(),
        Style::Latex => c.to_latex(),
    }
}

/// Renders an element, terms in ascending length-lexicographic word order.
pub fn format(e: &NCExpr, style: Style) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mul = match style {
        Style::Canonical => "*",
        Style::Latex => " ",
    };
    for (k, (w, c)) in e.terms().enumerate() {
        let negative = c.is_negative_monomial();
        let mag = if negative { -c } else { c.clone() };
        if k > 0 {
            out.push_str(if negative { " - " } else { " + " });
        } else if negative {
            out.push('-');
        }
        if w.is_empty() {
            // the empty word sorts first, so its scalar needs no grouping
            out.push_str(&scalar_text(&mag, style));
            continue;
        }
        let word = word_text(e, w, style);
        if mag.is_one() {
            out.push_str(&word);
        } else if mag.is_polynomial() && mag.numerator().len() == 1 {
            out.push_str(&scalar_text(&mag, style));
            out.push_str(mul);
            out.push_str(&word);
        } else if mag.is_polynomial() || style == Style::Latex {
            out.push('(');
            out.push_str(&scalar_text(&mag, style));
            out.push(')');
            out.push_str(mul);
            out.push_str(&word);
        } else {
            // already "(num)/(den)"
            out.push_str(&scalar_text(&mag, style));
            out.push_str(mul);
            out.push_str(&word);
        }
    }
    out
}
