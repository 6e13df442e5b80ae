#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace mnm {

enum class Kind { Var, Zero, One, Min, Max, And, Imp, Forall };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
	Kind kind;
	std::string name; ///< Var only
	Formula left;     ///< binary, or the operand of Forall
	Formula right;
};

namespace f {
inline Formula var(std::string n) { return std::make_shared<const Node>(Node{Kind::Var, std::move(n), nullptr, nullptr}); }
inline Formula zero() { return std::make_shared<const Node>(Node{Kind::Zero, {}, nullptr, nullptr}); }
inline Formula one() { return std::make_shared<const Node>(Node{Kind::One, {}, nullptr, nullptr}); }
inline Formula bin(Kind k, Formula a, Formula b) {
	return std::make_shared<const Node>(Node{k, {}, std::move(a), std::move(b)});
}
inline Formula min(Formula a, Formula b) { return bin(Kind::Min, std::move(a), std::move(b)); }
inline Formula max(Formula a, Formula b) { return bin(Kind::Max, std::move(a), std::move(b)); }
inline Formula conj(Formula a, Formula b) { return bin(Kind::And, std::move(a), std::move(b)); }
inline Formula imp(Formula a, Formula b) { return bin(Kind::Imp, std::move(a), std::move(b)); }
inline Formula forall(Formula a) { return std::make_shared<const Node>(Node{Kind::Forall, {}, std::move(a), nullptr}); }
inline Formula neg(Formula a) { return imp(std::move(a), zero()); }
inline Formula exists(Formula a) { return neg(forall(neg(std::move(a)))); }
inline Formula iff(const Formula& a, const Formula& b) { return min(imp(a, b), imp(b, a)); }
} // namespace f

inline bool is_binary(Kind k) { return k == Kind::Min || k == Kind::Max || k == Kind::And || k == Kind::Imp; }

inline bool same(const Formula& a, const Formula& b) {
	if (a == b)
		return true;
	if (!a || !b || a->kind != b->kind)
		return false;
	switch (a->kind) {
	case Kind::Var: return a->name == b->name;
	case Kind::Zero:
	case Kind::One: return true;
	case Kind::Forall: return same(a->left, b->left);
	default: return same(a->left, b->left) && same(a->right, b->right);
	}
}

inline std::size_t depth(const Formula& a) {
	switch (a->kind) {
	case Kind::Var:
	case Kind::Zero:
	case Kind::One: return 0;
	case Kind::Forall: return 1 + depth(a->left);
	default: return 1 + std::max(depth(a->left), depth(a->right));
	}
}

inline void collect_vars(const Formula& a, std::set<std::string>& out) {
	if (a->kind == Kind::Var)
		out.insert(a->name);
	if (a->left)
		collect_vars(a->left, out);
	if (a->right)
		collect_vars(a->right, out);
}

inline std::set<std::string> vars(const Formula& a) {
	std::set<std::string> s;
	collect_vars(a, s);
	return s;
}

// Printing. Binding strength: -> 1 (right assoc), \/ 2, /\ 3, & 4, A 5.
namespace detail {
inline int strength(Kind k) {
	switch (k) {
	case Kind::Imp: return 1;
	case Kind::Max: return 2;
	case Kind::Min: return 3;
	case Kind::And: return 4;
	default: return 5;
	}
}
inline const char* symbol(Kind k) {
	switch (k) {
	case Kind::Imp: return " -> ";
	case Kind::Max: return " \\/ ";
	case Kind::Min: return " /\\ ";
	case Kind::And: return " & ";
	default: return "";
	}
}
inline void print(const Formula& a, std::string& out) {
	switch (a->kind) {
	case Kind::Var: out += a->name; return;
	case Kind::Zero: out += '0'; return;
	case Kind::One: out += '1'; return;
	case Kind::Forall:
		if (is_binary(a->left->kind)) {
			out += "A(";
			print(a->left, out);
			out += ')';
		} else {
			out += "A ";
			print(a->left, out);
		}
		return;
	default: break;
	}
	const int s = strength(a->kind);
	const bool right_assoc = a->kind == Kind::Imp;
	auto child = [&](const Formula& c, bool is_left) {
		const int cs = strength(c->kind);
		const bool paren = cs < s || (cs == s && (right_assoc ? is_left : !is_left));
		if (paren)
			out += '(';
		print(c, out);
		if (paren)
			out += ')';
	};
	child(a->left, true);
	out += symbol(a->kind);
	child(a->right, false);
}
} // namespace detail

inline std::string print_formula(const Formula& a) {
	std::string s;
	detail::print(a, s);
	return s;
}

namespace detail {

class Parser {
public:
	explicit Parser(std::string text) : s_(std::move(text)) {}

	Formula parse_all() {
		auto r = iff();
		skip();
		if (pos_ != s_.size())
			fail("unexpected '" + std::string(1, s_[pos_]) + "'");
		return r;
	}

private:
	[[noreturn]] void fail(const std::string& msg) const {
		throw InputError("syntax error at column " + std::to_string(pos_ + 1) + ": " + msg);
	}
	void skip() {
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}
	bool eat(const char* tok) {
		skip();
		const std::string t(tok);
		if (s_.compare(pos_, t.size(), t) == 0) {
			pos_ += t.size();
			return true;
		}
		return false;
	}
	Formula iff() {
		auto l = imp();
		while (eat("<->"))
			l = f::iff(l, imp());
		return l;
	}
	Formula imp() {
		auto l = max();
		if (eat("->"))
			return f::imp(l, imp());
		return l;
	}
	Formula max() {
		auto l = min();
		while (eat("\\/"))
			l = f::max(l, min());
		return l;
	}
	Formula min() {
		auto l = conj();
		while (eat("/\\"))
			l = f::min(l, conj());
		return l;
	}
	Formula conj() {
		auto l = unary();
		while (eat("&"))
			l = f::conj(l, unary());
		return l;
	}
	static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
	static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
	Formula unary() {
		skip();
		if (pos_ >= s_.size())
			fail("unexpected end of input");
		if (eat("~"))
			return f::neg(unary());
		if (eat("(")) {
			auto r = iff();
			if (!eat(")"))
				fail("expected ')'");
			return r;
		}
		const char c = s_[pos_];
		if (c == '0' || c == '1') {
			if (pos_ + 1 < s_.size() && ident_char(s_[pos_ + 1]))
				fail("unknown token");
			++pos_;
			return c == '0' ? f::zero() : f::one();
		}
		if (ident_start(c)) {
			const std::size_t start = pos_;
			while (pos_ < s_.size() && ident_char(s_[pos_]))
				++pos_;
			const std::string id = s_.substr(start, pos_ - start);
			if (id == "A")
				return f::forall(unary());
			if (id == "E")
				return f::exists(unary());
			return f::var(id);
		}
		fail("unknown token '" + std::string(1, c) + "'");
	}

	std::string s_;
	std::size_t pos_ = 0;
};

} // namespace detail

/// Grammar, loosest first: <->, -> (right assoc), \/, /\, &, then A E ~.
/// Sugar is expanded: ~x = x -> 0, E x = ~A~x, x <-> y = (x -> y) /\ (y -> x).
inline Formula parse_formula(const std::string& text) { return detail::Parser(text).parse_all(); }

} // namespace mnm
