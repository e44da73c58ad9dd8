#include "pnchow/expr.hpp"

#include <cctype>
#include <sstream>

namespace pnchow {

bool operator==(const BundleExpr& x, const BundleExpr& y) {
    if (x.kind != y.kind || x.a != y.a || x.b != y.b ||
        x.kids.size() != y.kids.size())
        return false;
    for (std::size_t i = 0; i < x.kids.size(); ++i)
        if (!(*x.kids[i] == *y.kids[i])) return false;
    return true;
}

namespace {

ExprPtr node(BundleExpr::Kind kind, long a = 0, long b = 0,
             std::vector<ExprPtr> kids = {}) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = kind;
    e->a = a;
    e->b = b;
    e->kids = std::move(kids);
    return e;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : s_(src) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error(pos_, "'+', '^' or end of input");
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (peek_char(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw parse_error(pos_, what);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = pos_ < s_.size() && s_[pos_] == '-';
        if (neg) ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error(start, "integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    long uinteger() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error(pos_, "non-negative integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    ExprPtr expr() {
        std::vector<ExprPtr> terms;
        terms.push_back(term());
        while (eat('+')) terms.push_back(term());
        if (terms.size() == 1) return terms.front();
        return node(BundleExpr::Kind::Sum, 0, 0, std::move(terms));
    }

    ExprPtr term() {
        ExprPtr f = factor();
        if (eat('^')) {
            long m = uinteger();
            return node(BundleExpr::Kind::Pow, m, 0, {f});
        }
        return f;
    }

    ExprPtr factor() {
        skip_ws();
        if (eat('(')) {
            ExprPtr e = expr();
            expect(')', "')'");
            return e;
        }
        std::size_t start = pos_;
        std::string name = ident();
        if (name == "O") {
            if (eat('(')) {
                long d = integer();
                expect(')', "')'");
                return node(BundleExpr::Kind::Line, d);
            }
            return node(BundleExpr::Kind::Line, 0);
        }
        if (name == "T") {
            expect('(', "'(-1)' after 'T'");
            std::size_t arg_at = pos_;
            long d = integer();
            if (d != -1) throw parse_error(arg_at, "'-1' (only T(-1) is an atom)");
            expect(')', "')'");
            return node(BundleExpr::Kind::TangentTwist);
        }
        if (name == "Omega") {
            expect('(', "'('");
            long p = uinteger();
            expect(',', "','");
            long t = integer();
            expect(')', "')'");
            return node(BundleExpr::Kind::Omega, p, t);
        }
        if (name == "wedge" || name == "sym" || name == "hom") {
            expect('(', "'('");
            long k = uinteger();
            expect(',', "','");
            ExprPtr e = expr();
            expect(')', "')'");
            if (name == "wedge") return node(BundleExpr::Kind::Wedge, k, 0, {e});
            if (name == "sym") return node(BundleExpr::Kind::Sym, k, 0, {e});
            return node(BundleExpr::Kind::Pow, k, 0, {e});  // hom(m, e) = e^m
        }
        if (name == "dual") {
            expect('(', "'('");
            ExprPtr e = expr();
            expect(')', "')'");
            return node(BundleExpr::Kind::Dual, 0, 0, {e});
        }
        if (name == "twist") {
            expect('(', "'('");
            ExprPtr e = expr();
            expect(',', "','");
            long d = integer();
            expect(')', "')'");
            return node(BundleExpr::Kind::Twist, 0, d, {e});
        }
        throw parse_error(start, "'O', 'T(-1)', 'Omega', 'wedge', 'sym', 'hom', "
                                 "'dual', 'twist' or '('");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

bool needs_parens_in_pow(const BundleExpr& e) {
    return e.kind == BundleExpr::Kind::Sum || e.kind == BundleExpr::Kind::Pow;
}

}  // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).run(); }

std::string print_expr(const BundleExpr& e) {
    std::ostringstream out;
    switch (e.kind) {
        case BundleExpr::Kind::Line:
            out << "O";
            if (e.a != 0) out << "(" << e.a << ")";
            break;
        case BundleExpr::Kind::TangentTwist:
            out << "T(-1)";
            break;
        case BundleExpr::Kind::Omega:
            out << "Omega(" << e.a << ", " << e.b << ")";
            break;
        case BundleExpr::Kind::Sum:
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) out << " + ";
                out << print_expr(*e.kids[i]);
            }
            break;
        case BundleExpr::Kind::Pow:
            if (needs_parens_in_pow(*e.kids[0]))
                out << "(" << print_expr(*e.kids[0]) << ")";
            else
                out << print_expr(*e.kids[0]);
            out << "^" << e.a;
            break;
        case BundleExpr::Kind::Wedge:
            out << "wedge(" << e.a << ", " << print_expr(*e.kids[0]) << ")";
            break;
        case BundleExpr::Kind::Sym:
            out << "sym(" << e.a << ", " << print_expr(*e.kids[0]) << ")";
            break;
        case BundleExpr::Kind::Dual:
            out << "dual(" << print_expr(*e.kids[0]) << ")";
            break;
        case BundleExpr::Kind::Twist:
            out << "twist(" << print_expr(*e.kids[0]) << ", " << e.b << ")";
            break;
    }
    return out.str();
}

Bundle elaborate(const BundleExpr& e, int n) {
    switch (e.kind) {
        case BundleExpr::Kind::Line:
            return line_bundle(n, e.a);
        case BundleExpr::Kind::TangentTwist:
            return tangent_twist(n);
        case BundleExpr::Kind::Omega:
            return form_bundle(n, static_cast<int>(e.a), e.b);
        case BundleExpr::Kind::Sum: {
            Bundle r = elaborate(*e.kids[0], n);
            for (std::size_t i = 1; i < e.kids.size(); ++i)
                r = direct_sum(r, elaborate(*e.kids[i], n));
            return r;
        }
        case BundleExpr::Kind::Pow:
            return direct_sum_pow(elaborate(*e.kids[0], n), static_cast<int>(e.a));
        case BundleExpr::Kind::Wedge:
            return exterior_power(static_cast<int>(e.a), elaborate(*e.kids[0], n));
        case BundleExpr::Kind::Sym:
            return symmetric_power(static_cast<int>(e.a), elaborate(*e.kids[0], n));
        case BundleExpr::Kind::Dual:
            return dual(elaborate(*e.kids[0], n));
        case BundleExpr::Kind::Twist:
            return twist(elaborate(*e.kids[0], n), e.b);
    }
    throw std::logic_error("unreachable");
}

}  // namespace pnchow
