//! Text syntax for algebra elements: parser and printers.

mod format;
mod lexer;
mod parser;

pub use format::{format, Style};
pub use parser::{parse_scalar, parse_with, AlphabetResolver, Resolver};
pub(crate) use parser::as_two_letter_word;
