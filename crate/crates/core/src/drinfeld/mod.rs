//! The Drinfeld pairing, its Serre certificates, and the form `kappa`.

mod kappa;
mod tau;
mod uelem;
mod word;

pub use kappa::{ad, ad_antipode, jmath_eval, kappa, kappa_words};
pub use tau::{
    gradings_of_height, serre_certificate, serre_element, tau, words_of_grading, Order, Tau,
};
pub use uelem::{Mono, UElem};
pub use word::{Atom, Side, UPoly, UWord};
