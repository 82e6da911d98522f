//! TreeDoc: the JSON encoding of binomial trees.
//!
//! A tip is `{"tip": value}` and a node is `{"node": [left, right]}`. Output
//! is compact, with no whitespace, so golden files compare byte for byte.
//! Character lists are written as JSON strings.

use serde::de::DeserializeOwned;
use serde::Serialize;
use sublists_core::BinomialTree;

pub fn to_string<A: Serialize>(tree: &BinomialTree<A>) -> String {
    serde_json::to_string(tree).expect("tree values serialize to JSON")
}

pub fn to_value<A: Serialize>(tree: &BinomialTree<A>) -> serde_json::Value {
    serde_json::to_value(tree).expect("tree values serialize to JSON")
}

pub fn parse<A: DeserializeOwned>(text: &str) -> serde_json::Result<BinomialTree<A>> {
    serde_json::from_str(text)
}

pub fn word(chars: &[char]) -> String {
    chars.iter().collect()
}

/// Renders a tree of character lists with string tips.
pub fn words(tree: &BinomialTree<Vec<char>>) -> BinomialTree<String> {
    tree.map(|cs| word(cs))
}

/// Renders a tree of lists of character lists with string-array tips.
pub fn word_groups(tree: &BinomialTree<Vec<Vec<char>>>) -> BinomialTree<Vec<String>> {
    tree.map(|group| group.iter().map(|cs| word(cs)).collect())
}
