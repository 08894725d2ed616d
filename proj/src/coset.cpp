#include "magicarr/coset.hpp"

#include <deque>
#include <unordered_map>

namespace magicarr {

GroupWord inverse_word(const GroupWord& w) {
    GroupWord r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
    return r;
}

GroupWord free_reduce(GroupWord w) {
    GroupWord out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

namespace {

// Letters are columns 2g (generator) and 2g+1 (its inverse).
inline int column(const Letter& l) { return 2 * l.gen + (l.exp == 1 ? 0 : 1); }
inline int inv_column(int c) { return c ^ 1; }

class Table {
  public:
    Table(size_t ncols, uint64_t max_rows) : ncols_(ncols), max_rows_(max_rows) { new_coset(); }

    size_t ncols() const { return ncols_; }
    uint64_t defined() const { return next_ - 1; }

    // 1-based coset ids; 0 means undefined
    uint32_t get(uint32_t coset, int col) const { return tab_[(coset - 1) * ncols_ + col]; }
    void set(uint32_t coset, int col, uint32_t img) { tab_[(coset - 1) * ncols_ + col] = img; }

    bool can_define() const { return next_ <= max_rows_; }
    uint32_t new_coset() {
        tab_.resize(next_ * ncols_, 0);
        alive_.push_back(1);
        return next_++;
    }

    bool alive(uint32_t c) const { return alive_[c - 1]; }
    void kill(uint32_t c) { alive_[c - 1] = 0; }

    uint32_t rep(uint32_t c) {
        while (merged_.count(c)) c = merged_[c];
        return c;
    }
    void merge_into(uint32_t from, uint32_t to) { merged_[from] = to; }

    uint32_t count_alive() const {
        uint32_t n = 0;
        for (char a : alive_) n += a;
        return n;
    }

  private:
    size_t ncols_;
    uint64_t max_rows_;
    uint32_t next_ = 1;
    std::vector<uint32_t> tab_;
    std::vector<char> alive_;
    std::unordered_map<uint32_t, uint32_t> merged_;
};

class Enumerator {
  public:
    Enumerator(size_t ngens, const std::vector<GroupWord>& relators, uint64_t max_rows)
        : tab_(2 * ngens, max_rows) {
        for (const GroupWord& r : relators) {
            GroupWord red = free_reduce(r);
            if (red.empty()) continue;
            std::vector<int> cols;
            for (const Letter& l : red) cols.push_back(column(l));
            relators_.push_back(std::move(cols));
        }
    }

    CosetResult run() {
        CosetResult res;
        while (true) {
            // scan all relators at all live cosets until stable
            bool progress = true;
            while (progress && !overflow_) {
                progress = false;
                for (uint32_t c = 1; c <= tab_.defined() && !overflow_; ++c) {
                    if (!tab_.alive(c)) continue;
                    for (const auto& rel : relators_) {
                        if (!tab_.alive(c)) break;
                        if (scan_and_fill(c, rel)) progress = true;
                        if (overflow_) break;
                    }
                }
                process_coincidences();
            }
            if (overflow_) break;
            // find an undefined entry; define a new coset for it
            uint32_t hole_c = 0;
            int hole_col = -1;
            for (uint32_t c = 1; c <= tab_.defined() && hole_c == 0; ++c) {
                if (!tab_.alive(c)) continue;
                for (size_t col = 0; col < tab_.ncols(); ++col)
                    if (tab_.get(c, static_cast<int>(col)) == 0) {
                        hole_c = c;
                        hole_col = static_cast<int>(col);
                        break;
                    }
            }
            if (hole_c == 0) {
                res.completed = true;
                res.index = tab_.count_alive();
                break;
            }
            if (!tab_.can_define()) {
                overflow_ = true;
                break;
            }
            uint32_t fresh = tab_.new_coset();
            tab_.set(hole_c, hole_col, fresh);
            tab_.set(fresh, inv_column(hole_col), hole_c);
        }
        res.defined = tab_.defined();
        return res;
    }

  private:
    Table tab_;
    std::vector<std::vector<int>> relators_;
    std::deque<std::pair<uint32_t, uint32_t>> coincidences_;
    bool overflow_ = false;

    // Scan relator rel at coset c, filling a single gap or queueing a
    // coincidence. Returns true when the table changed.
    bool scan_and_fill(uint32_t start, const std::vector<int>& rel) {
        bool changed = false;
        while (true) {
            // forward
            uint32_t f = start;
            size_t i = 0;
            while (i < rel.size()) {
                uint32_t nxt = tab_.get(f, rel[i]);
                if (nxt == 0) break;
                f = tab_.rep(nxt);
                ++i;
            }
            if (i == rel.size()) {
                if (f != start) {
                    coincidences_.push_back({f, start});
                    process_coincidences();
                    changed = true;
                }
                return changed;
            }
            // backward
            uint32_t b = start;
            size_t j = rel.size();
            while (j > i) {
                uint32_t nxt = tab_.get(b, inv_column(rel[j - 1]));
                if (nxt == 0) break;
                b = tab_.rep(nxt);
                --j;
            }
            if (j == i) {
                // complete scan with mismatch
                if (f != b) {
                    coincidences_.push_back({f, b});
                    process_coincidences();
                    changed = true;
                }
                return changed;
            }
            if (j == i + 1) {
                // deduction closes the gap
                tab_.set(f, rel[i], b);
                tab_.set(b, inv_column(rel[i]), f);
                changed = true;
                continue;  // rescan; the deduction may cascade
            }
            // gap wider than one: define a coset for the first hole
            if (!tab_.can_define()) {
                overflow_ = true;
                return changed;
            }
            uint32_t fresh = tab_.new_coset();
            tab_.set(f, rel[i], fresh);
            tab_.set(fresh, inv_column(rel[i]), f);
            changed = true;
        }
    }

    void process_coincidences() {
        while (!coincidences_.empty()) {
            auto [a, b] = coincidences_.front();
            coincidences_.pop_front();
            a = tab_.rep(a);
            b = tab_.rep(b);
            if (a == b) continue;
            if (a < b) std::swap(a, b);  // keep the smaller id
            // merge a into b
            tab_.merge_into(a, b);
            tab_.kill(a);
            for (size_t col = 0; col < tab_.ncols(); ++col) {
                uint32_t img = tab_.get(a, static_cast<int>(col));
                if (img == 0) continue;
                img = tab_.rep(img);
                uint32_t bimg = tab_.rep(tab_.get(b, static_cast<int>(col)));
                if (bimg == 0) {
                    tab_.set(b, static_cast<int>(col), img);
                    tab_.set(img, inv_column(static_cast<int>(col)), b);
                } else if (bimg != img) {
                    coincidences_.push_back({bimg, img});
                }
            }
        }
        // normalize every live entry onto representatives
        for (uint32_t c = 1; c <= tab_.defined(); ++c) {
            if (!tab_.alive(c)) continue;
            for (size_t col = 0; col < tab_.ncols(); ++col) {
                uint32_t img = tab_.get(c, static_cast<int>(col));
                if (img != 0) tab_.set(c, static_cast<int>(col), tab_.rep(img));
            }
        }
    }
};

}  // namespace

CosetResult coset_enumerate(size_t ngens, const std::vector<GroupWord>& relators, uint64_t max_rows) {
    Enumerator e(ngens, relators, max_rows);
    return e.run();
}

}  // namespace magicarr
