#ifndef PAIRKIT_STORAGE_HPP
#define PAIRKIT_STORAGE_HPP

#include "pairkit/inverse.hpp"
#include "pairkit/mapping.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace pairkit {

// Flat index of the lower-triangular cell (row, col), col <= row.
inline Int tri_index(const Int& row, const Int& col) {
    if (row < 0 || col < 0 || col > row)
        throw IndexError("tri_index: need 0 <= col <= row, got (" + row.str() + "," + col.str() +
                         ")");
    return row * (row + 1) / 2 + col;
}

// Unique (row, col) with tri_index(row, col) == idx.
inline std::pair<Int, Int> tri_unindex(const Int& idx) {
    require_nat(idx, "idx");
    Int row = (isqrt(8 * idx + 1) - 1) / 2;
    return {row, idx - row * (row + 1) / 2};
}

// Lower-triangular matrix in linear memory: cell (r,c) lives at tri_index(r,c).
template <typename T>
class PackedTriangular {
public:
    explicit PackedTriangular(std::size_t order, const T& fill = T())
        : order_(order), data_(order * (order + 1) / 2, fill) {}

    std::size_t order() const { return order_; }
    std::size_t size() const { return data_.size(); }

    T& at(const Int& row, const Int& col) { return data_.at(slot(row, col)); }
    const T& at(const Int& row, const Int& col) const { return data_.at(slot(row, col)); }

    // Symmetric-style access: (r,c) with c > r reads cell (c,r).
    const T& at_symmetric(const Int& row, const Int& col) const {
        return col > row ? at(col, row) : at(row, col);
    }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

private:
    std::size_t slot(const Int& row, const Int& col) const {
        Int idx = tri_index(row, col);
        if (row >= Int(order_))
            throw IndexError("PackedTriangular: row " + row.str() + " out of range (order " +
                             std::to_string(order_) + ")");
        return static_cast<std::size_t>(idx);
    }

    std::size_t order_;
    std::vector<T> data_;
};

// Simplex tensor {x+y+z <= extent} in linear memory at flat index eval_p3d.
template <typename T>
class PackedSimplex3 {
public:
    explicit PackedSimplex3(std::size_t extent, const T& fill = T())
        : extent_(extent),
          data_((extent + 1) * (extent + 2) * (extent + 3) / 6, fill) {}

    std::size_t extent() const { return extent_; }
    std::size_t size() const { return data_.size(); }

    T& at(const Point3& p) { return data_.at(slot(p)); }
    const T& at(const Point3& p) const { return data_.at(slot(p)); }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

private:
    std::size_t slot(const Point3& p) const {
        if (p.x < 0 || p.y < 0 || p.z < 0 || p.x + p.y + p.z > Int(extent_))
            throw IndexError("PackedSimplex3: point outside the simplex of extent " +
                             std::to_string(extent_));
        return static_cast<std::size_t>(eval_p3d(p));
    }

    std::size_t extent_;
    std::vector<T> data_;
};

// CSV stream form: first line "order,<n>" / "extent,<n>", then one element per
// line in flat-index order.
template <typename T>
void save_csv(const PackedTriangular<T>& m, std::ostream& os) {
    os << "order," << m.order() << "\n";
    for (const T& v : m.data()) os << v << "\n";
}

template <typename T>
void save_csv(const PackedSimplex3<T>& m, std::ostream& os) {
    os << "extent," << m.extent() << "\n";
    for (const T& v : m.data()) os << v << "\n";
}

namespace detail {
inline std::size_t read_header(std::istream& is, const char* key) {
    std::string line;
    if (!std::getline(is, line)) throw DomainError("storage CSV: missing header");
    std::string prefix = std::string(key) + ",";
    if (line.rfind(prefix, 0) != 0)
        throw DomainError("storage CSV: expected header '" + prefix + "<n>', got '" + line + "'");
    return static_cast<std::size_t>(std::stoull(line.substr(prefix.size())));
}

template <typename T>
void read_elements(std::istream& is, std::vector<T>& out) {
    std::string line;
    for (auto& slot : out) {
        if (!std::getline(is, line)) throw DomainError("storage CSV: truncated element list");
        std::istringstream cell(line);
        cell >> slot;
        if (cell.fail()) throw DomainError("storage CSV: unparsable element '" + line + "'");
    }
}
}  // namespace detail

template <typename T>
PackedTriangular<T> load_triangular_csv(std::istream& is) {
    PackedTriangular<T> m(detail::read_header(is, "order"));
    detail::read_elements(is, m.data());
    return m;
}

template <typename T>
PackedSimplex3<T> load_simplex_csv(std::istream& is) {
    PackedSimplex3<T> m(detail::read_header(is, "extent"));
    detail::read_elements(is, m.data());
    return m;
}

}  // namespace pairkit

#endif
