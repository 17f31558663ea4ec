#include "cycdes/tableaux.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cycdes {

namespace {

int wrap_to_n(long long v, int n) {
    long long r = ((v - 1) % n + n) % n + 1;
    return static_cast<int>(r);
}

void validate_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i && p[i] > p[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

}  // namespace

SkewShape::SkewShape(std::vector<Cell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("empty shape");
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw std::invalid_argument("repeated cell in shape");

    // normalize: drop empty rows, shift minima to 0
    int mincol = cells_.front().col;
    for (const Cell& c : cells_) mincol = std::min(mincol, c.col);
    std::vector<int> rows;
    for (const Cell& c : cells_) rows.push_back(c.row);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (Cell& c : cells_) {
        c.row = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), c.row) - rows.begin());
        c.col -= mincol;
    }
    std::sort(cells_.begin(), cells_.end());

    // row intervals, contiguous and weakly sliding left going down
    const int nrows = cells_.back().row + 1;
    std::vector<int> start(static_cast<std::size_t>(nrows)), end(static_cast<std::size_t>(nrows));
    std::size_t i = 0;
    for (int r = 0; r < nrows; ++r) {
        std::size_t first = i;
        while (i < cells_.size() && cells_[i].row == r) ++i;
        start[static_cast<std::size_t>(r)] = cells_[first].col;
        end[static_cast<std::size_t>(r)] = cells_[i - 1].col + 1;
        if (static_cast<int>(i - first) != end[static_cast<std::size_t>(r)] - start[static_cast<std::size_t>(r)])
            throw std::invalid_argument("row cells must form an interval");
    }
    for (int r = 0; r + 1 < nrows; ++r) {
        if (start[static_cast<std::size_t>(r)] < start[static_cast<std::size_t>(r + 1)] ||
            end[static_cast<std::size_t>(r)] < end[static_cast<std::size_t>(r + 1)])
            throw std::invalid_argument("rows do not form a skew diagram");
    }

    label_components();
}

SkewShape SkewShape::from_partitions(const Partition& lambda, const Partition& mu) {
    validate_partition(lambda);
    validate_partition(mu);
    if (mu.size() > lambda.size()) throw std::invalid_argument("mu not contained in lambda");
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        int from = r < mu.size() ? mu[r] : 0;
        if (from > lambda[r]) throw std::invalid_argument("mu not contained in lambda");
        for (int c = from; c < lambda[r]; ++c) cells.push_back({static_cast<int>(r), c});
    }
    return SkewShape(std::move(cells));
}

SkewShape SkewShape::direct_sum(const std::vector<Partition>& components) {
    if (components.empty()) throw std::invalid_argument("empty direct sum");
    for (const auto& p : components) {
        validate_partition(p);
        if (p.empty()) throw std::invalid_argument("empty component in direct sum");
    }
    // component c sits above the components listed before it, so its top row
    // equals the total height of the components listed after it
    std::vector<int> top_row(components.size(), 0);
    for (std::size_t c = components.size(); c-- > 1;)
        top_row[c - 1] = top_row[c] + static_cast<int>(components[c].size());
    std::vector<Cell> cells;
    int col_offset = 0;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const Partition& p = components[c];
        for (std::size_t r = 0; r < p.size(); ++r)
            for (int col = 0; col < p[r]; ++col)
                cells.push_back({top_row[c] + static_cast<int>(r), col_offset + col});
        col_offset += p[0];
    }
    return SkewShape(std::move(cells));
}

SkewShape SkewShape::near_hook(int n, int k) {
    if (k < 0 || k > n - 2 || n - 1 - k < 1)
        throw std::invalid_argument("near_hook needs 0 <= k < n-1");
    Partition hook;
    hook.push_back(n - 1 - k);
    for (int i = 0; i < k; ++i) hook.push_back(1);
    return direct_sum({hook, {1}});
}

namespace {

Partition parse_partition_list(std::string_view text, std::size_t base_offset) {
    Partition parts;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("shape parse error at offset " +
                                    std::to_string(base_offset + i) + ": " + what);
    };
    while (i < text.size()) {
        int value = 0;
        auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{}) fail("expected integer");
        i = static_cast<std::size_t>(p - text.data());
        int repeat = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            auto [p2, ec2] = std::from_chars(text.data() + i, text.data() + text.size(), repeat);
            if (ec2 != std::errc{}) fail("expected exponent");
            i = static_cast<std::size_t>(p2 - text.data());
        }
        for (int r = 0; r < repeat; ++r) parts.push_back(value);
        if (i < text.size()) {
            if (text[i] != ',') fail("expected ','");
            ++i;
        }
    }
    if (parts.empty()) fail("empty partition");
    return parts;
}

}  // namespace

SkewShape SkewShape::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("shape parse error at offset 0: empty input");

    if (text.starts_with("nh(")) {
        int n = 0, k = 0;
        std::size_t i = 3;
        auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), n);
        if (ec != std::errc{} || p >= text.data() + text.size() || *p != ',')
            throw std::invalid_argument("shape parse error at offset " + std::to_string(i) + ": bad nh()");
        i = static_cast<std::size_t>(p - text.data()) + 1;
        auto [p2, ec2] = std::from_chars(text.data() + i, text.data() + text.size(), k);
        if (ec2 != std::errc{} || p2 + 1 != text.data() + text.size() || *p2 != ')')
            throw std::invalid_argument("shape parse error at offset " + std::to_string(i) + ": bad nh()");
        return near_hook(n, k);
    }
    if (text.front() == '(') {
        std::vector<Partition> comps;
        std::size_t i = 0;
        while (i < text.size()) {
            if (text[i] != '(')
                throw std::invalid_argument("shape parse error at offset " + std::to_string(i) + ": expected '('");
            std::size_t close = text.find(')', i);
            if (close == std::string_view::npos)
                throw std::invalid_argument("shape parse error at offset " + std::to_string(i) + ": unclosed '('");
            comps.push_back(parse_partition_list(text.substr(i + 1, close - i - 1), i + 1));
            i = close + 1;
            if (i < text.size()) {
                if (text[i] != '+')
                    throw std::invalid_argument("shape parse error at offset " + std::to_string(i) + ": expected '+'");
                ++i;
            }
        }
        return direct_sum(comps);
    }
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return from_partitions(parse_partition_list(text, 0));
    return from_partitions(parse_partition_list(text.substr(0, slash), 0),
                           parse_partition_list(text.substr(slash + 1), slash + 1));
}

bool SkewShape::has_cell(int row, int col) const { return cell_index(row, col) >= 0; }

int SkewShape::cell_index(int row, int col) const {
    Cell probe{row, col};
    auto it = std::lower_bound(cells_.begin(), cells_.end(), probe);
    if (it != cells_.end() && *it == probe) return static_cast<int>(it - cells_.begin());
    return -1;
}

void SkewShape::label_components() {
    const int n = size();
    std::vector<int> id(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (id[static_cast<std::size_t>(i)] >= 0) continue;
        // flood fill
        std::vector<int> stack{i};
        id[static_cast<std::size_t>(i)] = next;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            const Cell& c = cells_[static_cast<std::size_t>(cur)];
            for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                int j = cell_index(c.row + dr, c.col + dc);
                if (j >= 0 && id[static_cast<std::size_t>(j)] < 0) {
                    id[static_cast<std::size_t>(j)] = next;
                    stack.push_back(j);
                }
            }
        }
        ++next;
    }
    // renumber southwest-to-northeast by minimum column
    std::vector<int> mincol(static_cast<std::size_t>(next), 1 << 30);
    for (int i = 0; i < n; ++i)
        mincol[static_cast<std::size_t>(id[static_cast<std::size_t>(i)])] =
            std::min(mincol[static_cast<std::size_t>(id[static_cast<std::size_t>(i)])], cells_[static_cast<std::size_t>(i)].col);
    std::vector<int> order(static_cast<std::size_t>(next));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return mincol[static_cast<std::size_t>(a)] < mincol[static_cast<std::size_t>(b)];
    });
    std::vector<int> rank(static_cast<std::size_t>(next));
    for (int r = 0; r < next; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    for (int& v : id) v = rank[static_cast<std::size_t>(v)];
    component_ids_ = std::move(id);
}

int SkewShape::component_count() const {
    return component_ids_.empty() ? 0 : *std::max_element(component_ids_.begin(), component_ids_.end()) + 1;
}

std::vector<SkewShape> SkewShape::components() const {
    const auto& ids = component_ids();
    int count = component_count();
    std::vector<std::vector<Cell>> groups(static_cast<std::size_t>(count));
    for (int i = 0; i < size(); ++i)
        groups[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])].push_back(cells_[static_cast<std::size_t>(i)]);
    std::vector<SkewShape> out;
    for (auto& g : groups) out.push_back(SkewShape(std::move(g)));
    return out;
}

bool SkewShape::is_connected() const { return component_count() == 1; }

bool SkewShape::has_2x2_block() const {
    for (const Cell& c : cells_)
        if (has_cell(c.row, c.col + 1) && has_cell(c.row + 1, c.col) && has_cell(c.row + 1, c.col + 1))
            return true;
    return false;
}

bool SkewShape::is_connected_ribbon() const { return is_connected() && !has_2x2_block(); }

bool SkewShape::is_straight() const {
    // straight means every row starts at column 0
    for (const Cell& c : cells_)
        if (!has_cell(c.row, 0)) return false;
    return true;
}

bool SkewShape::is_single_row() const {
    return std::all_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.row == cells_.front().row; });
}

bool SkewShape::is_single_column() const {
    return std::all_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.col == cells_.front().col; });
}

bool SkewShape::is_strip() const {
    const int count = component_count();
    std::array<int, kMaxN> row0, col0;
    std::array<bool, kMaxN> one_row, one_col, seen{};
    for (int i = 0; i < size(); ++i) {
        auto id = static_cast<std::size_t>(component_ids_[static_cast<std::size_t>(i)]);
        const Cell& c = cells_[static_cast<std::size_t>(i)];
        if (!seen[id]) {
            seen[id] = true;
            row0[id] = c.row;
            col0[id] = c.col;
            one_row[id] = one_col[id] = true;
        } else {
            if (c.row != row0[id]) one_row[id] = false;
            if (c.col != col0[id]) one_col[id] = false;
        }
    }
    for (int id = 0; id < count; ++id)
        if (!one_row[static_cast<std::size_t>(id)] && !one_col[static_cast<std::size_t>(id)])
            return false;
    return true;
}

std::optional<int> SkewShape::near_hook_arm() const {
    if (component_count() != 2) return std::nullopt;
    // the northeast component must be a single cell, the southwest one a
    // hook: every cell in its first row or first column, corner present
    int size1 = 0;
    int r0 = 1 << 30, c0 = 1 << 30, size0 = 0;
    for (int i = 0; i < size(); ++i) {
        const Cell& c = cells_[static_cast<std::size_t>(i)];
        if (component_ids_[static_cast<std::size_t>(i)] == 1) {
            ++size1;
            continue;
        }
        ++size0;
        r0 = std::min(r0, c.row);
        c0 = std::min(c0, c.col);
    }
    if (size1 != 1) return std::nullopt;
    int in_row = 0, in_col = 0;
    bool corner = false;
    for (int i = 0; i < size(); ++i) {
        if (component_ids_[static_cast<std::size_t>(i)] != 0) continue;
        const Cell& c = cells_[static_cast<std::size_t>(i)];
        if (c.row == r0) ++in_row;
        if (c.col == c0) ++in_col;
        if (c.row == r0 && c.col == c0) corner = true;
    }
    if (!corner || in_row + in_col - 1 != size0) return std::nullopt;
    return in_col - 1;  // k = column cells below the corner
}

Partition SkewShape::straight_partition() const {
    if (!is_straight()) throw std::domain_error("shape is not straight");
    std::map<int, int> width;
    for (const Cell& c : cells_) width[c.row] = std::max(width[c.row], c.col + 1);
    Partition p;
    for (auto& [row, w] : width) p.push_back(w);
    return p;
}

namespace {

std::string partition_run_str(const Partition& p) {
    std::string s;
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (i) s += ',';
        s += std::to_string(p[i]);
        if (j - i > 1) s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

}  // namespace

std::string SkewShape::str() const {
    auto comps = components();
    bool all_straight = std::all_of(comps.begin(), comps.end(),
                                    [](const SkewShape& s) { return s.is_straight(); });
    if (comps.size() > 1 && all_straight) {
        std::string s;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i) s += '+';
            s += '(' + partition_run_str(comps[i].straight_partition()) + ')';
        }
        return s;
    }
    if (is_straight()) return partition_str(straight_partition());
    // generic lambda/mu form from row intervals
    std::map<int, std::pair<int, int>> rows;
    for (const Cell& c : cells_) {
        auto it = rows.find(c.row);
        if (it == rows.end()) rows[c.row] = {c.col, c.col + 1};
        else {
            it->second.first = std::min(it->second.first, c.col);
            it->second.second = std::max(it->second.second, c.col + 1);
        }
    }
    Partition lambda, mu;
    for (auto& [row, se] : rows) {
        mu.push_back(se.first);
        lambda.push_back(se.second);
    }
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    std::string s = partition_str(lambda);
    if (!mu.empty()) s += '/' + partition_str(mu);
    return s;
}

Tableau::Tableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    const int n = shape_.size();
    if (static_cast<int>(entries_.size()) != n)
        throw std::invalid_argument("entry count does not match shape");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("entries must be a bijection onto [n]");
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int i = 0; i < n; ++i) {
        const Cell& c = shape_.cells()[static_cast<std::size_t>(i)];
        int right = shape_.cell_index(c.row, c.col + 1);
        if (right >= 0 && entries_[static_cast<std::size_t>(i)] > entries_[static_cast<std::size_t>(right)])
            throw std::invalid_argument("row entries must increase left to right");
        int below = shape_.cell_index(c.row + 1, c.col);
        if (below >= 0 && entries_[static_cast<std::size_t>(i)] > entries_[static_cast<std::size_t>(below)])
            throw std::invalid_argument("column entries must increase top to bottom");
    }
}

int Tableau::entry_at(int row, int col) const {
    int i = shape_.cell_index(row, col);
    if (i < 0) throw std::invalid_argument("no such cell");
    return entries_[static_cast<std::size_t>(i)];
}

Cell Tableau::cell_of(int value) const {
    for (int i = 0; i < size(); ++i)
        if (entries_[static_cast<std::size_t>(i)] == value)
            return shape_.cells()[static_cast<std::size_t>(i)];
    throw std::invalid_argument("value not present");
}

std::string Tableau::str() const {
    const auto& ids = shape_.component_ids();
    int count = shape_.component_count();
    std::string s;
    for (int comp = 0; comp < count; ++comp) {
        if (comp) s += " + ";
        s += '[';
        bool first_row = true;
        int current_row = -(1 << 30);
        for (int i = 0; i < size(); ++i) {
            if (ids[static_cast<std::size_t>(i)] != comp) continue;
            const Cell& c = shape_.cells()[static_cast<std::size_t>(i)];
            if (c.row != current_row) {
                if (!first_row) s += "],";
                s += '[';
                current_row = c.row;
                first_row = false;
            } else {
                s += ',';
            }
            s += std::to_string(entries_[static_cast<std::size_t>(i)]);
        }
        s += "]]";
    }
    return s;
}

std::vector<Tableau> enumerate_syt(const SkewShape& shape) {
    const int n = shape.size();
    // neighbor indices fixed up front; a cell is eligible once its left and
    // upper neighbors are filled
    std::vector<int> left(static_cast<std::size_t>(n)), up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Cell& c = shape.cells()[static_cast<std::size_t>(i)];
        left[static_cast<std::size_t>(i)] = shape.cell_index(c.row, c.col - 1);
        up[static_cast<std::size_t>(i)] = shape.cell_index(c.row - 1, c.col);
    }
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int value) -> void {
        if (value > n) {
            out.emplace_back(shape, entries);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (entries[static_cast<std::size_t>(i)] != 0) continue;
            int l = left[static_cast<std::size_t>(i)];
            if (l >= 0 && entries[static_cast<std::size_t>(l)] == 0) continue;
            int u = up[static_cast<std::size_t>(i)];
            if (u >= 0 && entries[static_cast<std::size_t>(u)] == 0) continue;
            entries[static_cast<std::size_t>(i)] = value;
            self(self, value + 1);
            entries[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

Mask des_set_syt(const Tableau& t) {
    const int n = t.size();
    Mask d(n == 0 ? 0 : n - 1);
    std::array<int, kMaxN + 1> row_of;
    for (int i = 0; i < n; ++i)
        row_of[static_cast<std::size_t>(t.entries()[static_cast<std::size_t>(i)])] =
            t.shape().cells()[static_cast<std::size_t>(i)].row;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) d.insert(i);
    return d;
}

bool is_connected_ribbon(const SkewShape& shape) { return shape.is_connected_ribbon(); }

namespace {

void require_strip(const SkewShape& shape) {
    if (!shape.is_strip() || shape.component_count() < 2)
        throw std::domain_error("strip cyclic descents need a strip with >= 2 components");
}

}  // namespace

Mask cdes_strip(const Tableau& t) {
    require_strip(t.shape());
    const int n = t.size();
    Mask cd(n);
    std::array<int, kMaxN + 1> row_of;
    int idx_one = 0, idx_top = 0;
    for (int i = 0; i < n; ++i) {
        int entry = t.entries()[static_cast<std::size_t>(i)];
        row_of[static_cast<std::size_t>(entry)] = t.shape().cells()[static_cast<std::size_t>(i)].row;
        if (entry == 1) idx_one = i;
        if (entry == n) idx_top = i;
    }
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) cd.insert(i);

    const Cell& one = t.shape().cells()[static_cast<std::size_t>(idx_one)];
    const Cell& top = t.shape().cells()[static_cast<std::size_t>(idx_top)];
    bool lower = one.row > top.row;
    // 1 and n share a vertical component exactly when they sit in one column
    // (within a strip, a shared component is a single row or column)
    bool same_vertical = one.col == top.col && one.row != top.row &&
                         t.shape().component_ids()[static_cast<std::size_t>(idx_one)] ==
                             t.shape().component_ids()[static_cast<std::size_t>(idx_top)];
    if (lower || same_vertical) cd.insert(n);
    return cd;
}

Tableau rotate_strip(const Tableau& t, int j) {
    require_strip(t.shape());
    const int n = t.size();
    const auto& ids = t.shape().component_ids();
    // shift all entries, then sort within each component; cells of a
    // component are already in (row, col) order, which reads a row
    // left-to-right and a column top-to-bottom
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        entries[static_cast<std::size_t>(i)] = wrap_to_n(t.entries()[static_cast<std::size_t>(i)] + j, n);
    std::size_t lo = 0;
    while (lo < entries.size()) {
        std::size_t hi = lo + 1;
        while (hi < entries.size() && ids[hi] == ids[lo]) ++hi;
        std::sort(entries.begin() + static_cast<std::ptrdiff_t>(lo),
                  entries.begin() + static_cast<std::ptrdiff_t>(hi));
        lo = hi;
    }
    return Tableau(t.shape(), std::move(entries));
}

namespace {

int require_near_hook(const SkewShape& shape) {
    auto k = shape.near_hook_arm();
    if (!k) throw std::domain_error("shape is not a near-hook (n-1-k,1^k)+(1)");
    return *k;
}

}  // namespace

int delta(const Tableau& t) {
    require_near_hook(t.shape());
    const Cell ne = t.shape().cells().front();  // row 0 holds only the detached cell
    return t.entry_at(ne.row, ne.col);
}

Mask cdes_near_hook(const Tableau& t) {
    int k = require_near_hook(t.shape());
    const int n = t.size();
    Mask d = des_set_syt(t);
    Mask cd(n);
    for (int e : d.elements()) cd.insert(e);
    if (d.count() == k) cd.insert(n);
    return cd;
}

Tableau rotate_near_hook(const Tableau& t, int j) {
    int k = require_near_hook(t.shape());
    const int n = t.size();
    j = ((j % n) + n) % n;
    if (j == 0) return t;

    Mask des = des_set_syt(t);
    Mask cdes = cdes_near_hook(t);
    int dl = delta(t);

    Mask removed = cdes;
    if (des.contains(n - j)) removed.erase(n - j);
    else removed.erase(dl);

    std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
    int new_delta = wrap_to_n(dl + j, n);
    taken[static_cast<std::size_t>(new_delta)] = true;
    std::vector<int> column_below;
    for (int e : removed.elements()) {
        int v = wrap_to_n(static_cast<long long>(e) + j + 1, n);
        column_below.push_back(v);
        if (taken[static_cast<std::size_t>(v)])
            throw std::logic_error("near-hook rotation produced a collision");
        taken[static_cast<std::size_t>(v)] = true;
    }
    std::sort(column_below.begin(), column_below.end());
    if (static_cast<int>(column_below.size()) != k)
        throw std::logic_error("near-hook rotation produced a wrong column size");

    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!taken[static_cast<std::size_t>(v)]) rest.push_back(v);
    int corner = rest.front();

    // assemble entries in cell order: NE cell first (row 0), then the first
    // hook row left to right, then the column cells downward
    std::vector<int> entries;
    entries.push_back(new_delta);
    entries.push_back(corner);
    for (std::size_t i = 1; i < rest.size(); ++i) entries.push_back(rest[i]);
    for (int v : column_below) entries.push_back(v);
    return Tableau(t.shape(), std::move(entries));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_hook(const Partition& lambda) {
    return lambda.size() <= 1 || lambda[1] <= 1;
}

std::string partition_str(const Partition& lambda) {
    std::string s;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda[i]);
    }
    return s;
}

}  // namespace cycdes
