#include "spalg/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spalg {

Word concat_words(const Word& a, const Word& b) {
    Word c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

Word invert_word(const Word& w) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
}

namespace {

Word free_reduce(const Word& w) {
    Word out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::vector<Word> GroupModel::ball(int r) const {
    std::set<Word> seen;
    std::deque<Word> queue;
    seen.insert(Word{});
    queue.push_back(Word{});
    while (!queue.empty()) {
        Word u = queue.front();
        queue.pop_front();
        for (int i = 0; i < num_generators(); ++i)
            for (int s : {1, -1}) {
                Word v = normal_form(concat_words(u, Word{s * (i + 1)}));
                if ((int)v.size() > r) continue;
                if (seen.insert(v).second) queue.push_back(v);
            }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

Word GroupModel::parse(const std::string& text) const {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int exp = 1;
        auto caret = tok.find('^');
        std::string name = tok;
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            exp = std::stoi(tok.substr(caret + 1));
        }
        int idx = -1;
        for (int i = 0; i < num_generators(); ++i)
            if (generator_name(i) == name) idx = i;
        if (idx < 0) throw std::runtime_error("unknown generator '" + name + "'");
        for (int k = 0; k < std::abs(exp); ++k) w.push_back(exp > 0 ? idx + 1 : -(idx + 1));
    }
    return normal_form(w);
}

std::string GroupModel::print(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += generator_name(std::abs(w[i]) - 1);
        if (w[i] < 0) s += "^-1";
    }
    return s;
}

namespace {

class FreeAbelian : public GroupModel {
  public:
    explicit FreeAbelian(int rank) : rank_(rank) {
        if (rank < 0) throw std::runtime_error("free_abelian: negative rank");
    }
    int num_generators() const override { return rank_; }
    std::string generator_name(int i) const override { return "e" + std::to_string(i); }
    bool is_abelian() const override { return true; }
    std::string describe() const override { return "Z^" + std::to_string(rank_); }

    Word normal_form(const Word& w) const override {
        std::vector<long long> e(rank_, 0);
        for (int l : w) {
            int i = std::abs(l) - 1;
            if (i >= rank_) throw std::runtime_error("letter out of range");
            e[i] += l > 0 ? 1 : -1;
        }
        Word out;
        for (int i = 0; i < rank_; ++i)
            for (long long k = 0; k < std::llabs(e[i]); ++k)
                out.push_back(e[i] > 0 ? i + 1 : -(i + 1));
        return out;
    }

  private:
    int rank_;
};

class Free : public GroupModel {
  public:
    explicit Free(int rank) : rank_(rank) {
        if (rank < 1) throw std::runtime_error("free_group: rank must be >= 1");
    }
    int num_generators() const override { return rank_; }
    std::string generator_name(int i) const override { return "x" + std::to_string(i); }
    bool is_abelian() const override { return rank_ == 1; }
    std::string describe() const override { return "F_" + std::to_string(rank_); }
    Word normal_form(const Word& w) const override { return free_reduce(w); }
    std::optional<Word> conjugacy_normal_form(const Word& g) const override {
        Word w = free_reduce(g);
        // Cyclically reduce, then take the least rotation.
        while (w.size() >= 2 && w.front() == -w.back()) {
            w.erase(w.begin());
            w.pop_back();
        }
        if (w.empty()) return w;
        Word best = w;
        for (size_t i = 1; i < w.size(); ++i) {
            std::rotate(w.begin(), w.begin() + 1, w.end());
            if (w < best) best = w;
        }
        return best;
    }

  private:
    int rank_;
};

// <a, b | aba = b>; every element is b^m a^n.
class KleinBottle : public GroupModel {
  public:
    int num_generators() const override { return 2; }
    std::string generator_name(int i) const override { return i == 0 ? "a" : "b"; }
    bool is_abelian() const override { return false; }
    std::string describe() const override { return "Klein bottle group <a,b | aba=b>"; }

    Word normal_form(const Word& w) const override {
        long long m = 0, n = 0;
        for (int l : w) {
            if (std::abs(l) == 1) {
                n += l > 0 ? 1 : -1;
            } else if (std::abs(l) == 2) {
                m += l > 0 ? 1 : -1;
                n = -n;
            } else {
                throw std::runtime_error("letter out of range");
            }
        }
        Word out;
        for (long long k = 0; k < std::llabs(m); ++k) out.push_back(m > 0 ? 2 : -2);
        for (long long k = 0; k < std::llabs(n); ++k) out.push_back(n > 0 ? 1 : -1);
        return out;
    }

    std::optional<Word> conjugacy_normal_form(const Word& g) const override {
        // b^m a^n: conjugation by b negates n; by a, shifts n by -2 when m odd.
        long long m = 0, n = 0;
        for (int l : normal_form(g)) {
            if (std::abs(l) == 1)
                n += l > 0 ? 1 : -1;
            else
                m += l > 0 ? 1 : -1;
        }
        if (m % 2 != 0) {
            // n determined mod 2; representative n in {0, 1}
            n = ((n % 2) + 2) % 2;
        } else {
            n = std::llabs(n);
        }
        Word out;
        for (long long k = 0; k < std::llabs(m); ++k) out.push_back(m > 0 ? 2 : -2);
        for (long long k = 0; k < n; ++k) out.push_back(1);
        return out;
    }
};

// Genus-g surface group with the standard one-relator presentation;
// Dehn's algorithm on the symmetrized relator set.
class Surface : public GroupModel {
  public:
    explicit Surface(int genus) : genus_(genus) {
        if (genus < 2) throw std::runtime_error("surface_group: genus must be >= 2");
        Word r;
        for (int i = 0; i < genus; ++i) {
            int a = 2 * i + 1, b = 2 * i + 2;
            r.insert(r.end(), {a, b, -a, -b});
        }
        relator_len_ = (int)r.size();  // 4g
        Word rinv = invert_word(r);
        for (int s = 0; s < relator_len_; ++s) {
            rotations_.push_back(r);
            std::rotate(r.begin(), r.begin() + 1, r.end());
            rotations_.push_back(rinv);
            std::rotate(rinv.begin(), rinv.begin() + 1, rinv.end());
        }
    }

    int num_generators() const override { return 2 * genus_; }
    std::string generator_name(int i) const override {
        return (i % 2 == 0 ? "a" : "b") + std::to_string(i / 2 + 1);
    }
    bool is_abelian() const override { return false; }
    std::string describe() const override {
        return "surface group, genus " + std::to_string(genus_);
    }

    // Dehn-reduced words of length below half the relator are unique.  At
    // exactly half length, the two complementary relator halves are
    // identified deterministically.  Longer Dehn-reduced words can still
    // alias, so they are canonicalized against a cache of representatives
    // using the (exact) word problem for equality.
    Word normal_form(const Word& w0) const override {
        Word w = canonical_half(dehn_reduce(w0));
        if ((int)w.size() <= relator_len_ / 2) return w;
        auto memo = memo_.find(w);
        if (memo != memo_.end()) return memo->second;
        std::vector<int> key = abelianization(w);
        auto& bucket = cache_[key];
        for (const Word& c : bucket) {
            if (dehn_reduce(concat_words(w, invert_word(c))).empty()) {
                memo_[w] = c;
                return c;
            }
        }
        bucket.push_back(w);
        memo_[w] = w;
        return w;
    }

  private:
    Word dehn_reduce(const Word& w0) const {
        Word w = free_reduce(w0);
        int half = relator_len_ / 2;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < w.size() && !changed; ++i) {
                for (const Word& rho : rotations_) {
                    int match = 0;
                    while (i + match < w.size() && match < relator_len_ &&
                           w[i + match] == rho[match])
                        ++match;
                    if (match > half) {
                        Word v(rho.begin() + match, rho.end());
                        Word repl = invert_word(v);
                        Word next(w.begin(), w.begin() + i);
                        next.insert(next.end(), repl.begin(), repl.end());
                        next.insert(next.end(), w.begin() + i + match, w.end());
                        w = free_reduce(next);
                        changed = true;
                        break;
                    }
                }
            }
        }
        return w;
    }

    Word canonical_half(const Word& w) const {
        int half = relator_len_ / 2;
        if ((int)w.size() != half) return w;
        Word best = w;
        for (const Word& rho : rotations_) {
            if (std::equal(w.begin(), w.end(), rho.begin())) {
                Word other = invert_word(Word(rho.begin() + half, rho.end()));
                if (word_less(other, best)) best = other;
            }
        }
        return best;
    }

    std::vector<int> abelianization(const Word& w) const {
        std::vector<int> e(2 * genus_, 0);
        for (int l : w) e[std::abs(l) - 1] += l > 0 ? 1 : -1;
        return e;
    }

    int genus_;
    int relator_len_;
    std::vector<Word> rotations_;
    mutable std::map<std::vector<int>, std::vector<Word>> cache_;
    mutable std::map<Word, Word> memo_;
};

class ProductWithZ : public GroupModel {
  public:
    explicit ProductWithZ(GroupPtr inner) : inner_(std::move(inner)) {
        if (!inner_) throw std::runtime_error("product_with_Z: null inner model");
    }
    int num_generators() const override { return inner_->num_generators() + 1; }
    std::string generator_name(int i) const override {
        return i < inner_->num_generators() ? inner_->generator_name(i) : "z";
    }
    bool is_abelian() const override { return inner_->is_abelian(); }
    std::string describe() const override { return inner_->describe() + " x Z"; }

    Word normal_form(const Word& w) const override {
        int zi = inner_->num_generators() + 1;
        Word in;
        long long zexp = 0;
        for (int l : w) {
            if (std::abs(l) == zi)
                zexp += l > 0 ? 1 : -1;
            else
                in.push_back(l);
        }
        Word out = inner_->normal_form(in);
        for (long long k = 0; k < std::llabs(zexp); ++k) out.push_back(zexp > 0 ? zi : -zi);
        return out;
    }

    std::optional<Word> conjugacy_normal_form(const Word& g) const override {
        int zi = inner_->num_generators() + 1;
        Word nf = normal_form(g);
        Word in, z;
        for (int l : nf)
            (std::abs(l) == zi ? z : in).push_back(l);
        auto icn = inner_->conjugacy_normal_form(in);
        if (!icn) return std::nullopt;
        Word out = *icn;
        out.insert(out.end(), z.begin(), z.end());
        return out;
    }

  private:
    GroupPtr inner_;
};

}  // namespace

GroupPtr free_abelian(int rank) { return std::make_shared<FreeAbelian>(rank); }
GroupPtr free_group(int rank) { return std::make_shared<Free>(rank); }
GroupPtr klein_bottle() { return std::make_shared<KleinBottle>(); }
GroupPtr surface_group(int genus) { return std::make_shared<Surface>(genus); }
GroupPtr direct_product_with_Z(GroupPtr inner) {
    return std::make_shared<ProductWithZ>(std::move(inner));
}

ConjugacyOrbit conjugacy_class_in_ball(const GroupModel& m, const Word& g, int r) {
    Word start = m.normal_form(g);
    if ((int)start.size() > r)
        throw std::runtime_error("conjugacy_class_in_ball: element outside the ball");
    ConjugacyOrbit orbit;
    orbit.closed = true;
    std::set<Word> seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty()) {
        Word u = queue.front();
        queue.pop_front();
        for (int i = 0; i < m.num_generators(); ++i)
            for (int s : {1, -1}) {
                Word v = m.conjugate(Word{s * (i + 1)}, u);
                if ((int)v.size() > r) {
                    orbit.closed = false;
                    continue;
                }
                if (seen.insert(v).second) queue.push_back(v);
            }
    }
    orbit.elements.assign(seen.begin(), seen.end());
    std::sort(orbit.elements.begin(), orbit.elements.end(), word_less);
    orbit.label = orbit.elements.front();
    return orbit;
}

void GroupAlgebraElement::add_term(const Word& w, const Scalar& c) {
    if (c.field() != field) throw FieldMismatch();
    auto it = terms.find(w);
    if (it == terms.end()) {
        if (!c.is_zero()) terms[w] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

std::vector<GroupAlgebraElement> CentralUnitReport::class_sums(Field f) const {
    std::vector<GroupAlgebraElement> out;
    for (const auto& cls : classes) {
        GroupAlgebraElement e;
        e.field = f;
        for (const auto& w : cls.elements) e.add_term(w, Scalar::one(f));
        out.push_back(std::move(e));
    }
    return out;
}

CentralUnitReport central_unit_search(const GroupModel& m, int radius) {
    CentralUnitReport rep;
    rep.radius = radius;
    std::set<Word> classified;
    classified.insert(Word{});  // the trivial unit is not a witness
    for (const Word& g : m.ball(radius)) {
        if (classified.count(g)) continue;
        ConjugacyOrbit orbit = conjugacy_class_in_ball(m, g, radius);
        for (const auto& w : orbit.elements) classified.insert(w);
        if (orbit.closed) rep.classes.push_back(std::move(orbit));
    }
    rep.found = !rep.classes.empty();
    return rep;
}

}  // namespace spalg
