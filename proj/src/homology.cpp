#include "chowgamma/homology.hpp"

#include <algorithm>

#include "chowgamma/errors.hpp"

namespace chowgamma {

OrderComplex::OrderComplex(const RankSelectedPoset& poset)
    : lattice_(&poset.lattice()), ranks_(poset.ranks()) {
    std::size_t dims = ranks_.size() + 1;
    faces_.assign(dims, {});
    faces_[0].push_back(Chain{});
    for (const RankSet& sub : subsets_of(ranks_)) {
        if (sub.empty()) continue;
        auto& bucket = faces_[sub.size()];
        for_each_chain(*lattice_, sub, [&bucket](const Chain& c) { bucket.push_back(c); });
    }
    index_.assign(dims, {});
    for (std::size_t k = 0; k < dims; ++k) {
        std::sort(faces_[k].begin(), faces_[k].end());
        for (std::size_t i = 0; i < faces_[k].size(); ++i) index_[k].emplace(faces_[k][i], i);
    }
    for (int d = 0; d <= top_dimension(); ++d) {
        const auto& cols = faces(d);
        SparseIntMatrix m(faces(d - 1).size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Chain& c = cols[j];
            for (std::size_t i = 0; i < c.size(); ++i) {
                Chain facet;
                facet.reserve(c.size() - 1);
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (k != i) facet.push_back(c[k]);
                long row = face_index(facet);
                if (row < 0) throw ConsistencyError("order complex is not closed under faces");
                m.add(static_cast<std::size_t>(row), j, (i % 2 == 0) ? 1 : -1);
            }
        }
        boundary_.push_back(std::move(m));
    }
}

OrderComplex order_complex(const RankSelectedPoset& poset) { return OrderComplex(poset); }

const std::vector<Chain>& OrderComplex::faces(int d) const {
    if (d < -1 || d > top_dimension()) throw DomainError("face dimension out of range");
    return faces_[static_cast<std::size_t>(d + 1)];
}

long OrderComplex::face_index(const Chain& c) const {
    if (c.size() >= index_.size()) return -1;
    const auto& idx = index_[c.size()];
    auto it = idx.find(c);
    return it == idx.end() ? -1 : static_cast<long>(it->second);
}

const SparseIntMatrix& OrderComplex::boundary(int d) const {
    if (d < 0 || d > top_dimension()) throw DomainError("boundary dimension out of range");
    return boundary_[static_cast<std::size_t>(d)];
}

long BettiVector::at(int dim) const {
    if (dim < -1 || dim > max_dimension()) return 0;
    return values[static_cast<std::size_t>(dim + 1)];
}

long BettiVector::euler_characteristic() const {
    long chi = 0;
    for (int d = -1; d <= max_dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * at(d);
    return chi;
}

BettiVector reduced_betti(const OrderComplex& c) {
    int top = c.top_dimension();
    std::vector<long> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[d + 1] = rank of boundary(d)
    for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d + 1)] = static_cast<long>(rank(c.boundary(d)));
    BettiVector b;
    for (int d = -1; d <= top; ++d) {
        long rank_out = ranks[static_cast<std::size_t>(d + 1)];
        long rank_in = d + 1 <= top ? ranks[static_cast<std::size_t>(d + 2)] : 0;
        b.values.push_back(static_cast<long>(c.face_count(d)) - rank_out - rank_in);
    }
    return b;
}

long reduced_face_euler_characteristic(const OrderComplex& c) {
    long chi = 0;
    for (int d = -1; d <= c.top_dimension(); ++d) {
        long sign = (d % 2 == 0) ? 1 : -1;
        chi += sign * static_cast<long>(c.face_count(d));
    }
    return chi;
}

namespace {

Chain image_of(const Chain& c, const std::vector<std::size_t>& flat_image) {
    Chain out;
    out.reserve(c.size());
    for (std::size_t f : c) out.push_back(flat_image[f]);
    return out;
}

}  // namespace

TopHomology::TopHomology(const OrderComplex& complex) : complex_(&complex) {
    if (complex.top_dimension() < 0) {
        basis_.free_columns = {0};
        basis_.vectors = {{mpq_class(1)}};
    } else {
        basis_ = kernel_basis(complex.boundary(complex.top_dimension()));
    }
}

mpz_class TopHomology::trace(const std::vector<std::size_t>& flat_image) const {
    const OrderComplex& c = *complex_;
    if (flat_image.size() != c.lattice().size()) throw DomainError("flat permutation has the wrong length");
    int top = c.top_dimension();
    const auto& top_faces = c.faces(top);
    std::vector<std::size_t> face_image(top_faces.size());
    for (std::size_t i = 0; i < top_faces.size(); ++i) {
        long j = c.face_index(image_of(top_faces[i], flat_image));
        if (j < 0) throw DomainError("permutation does not preserve the order complex");
        face_image[i] = static_cast<std::size_t>(j);
    }
    std::vector<std::size_t> face_preimage(top_faces.size());
    for (std::size_t i = 0; i < face_image.size(); ++i) face_preimage[face_image[i]] = i;

    mpq_class total = 0;
    for (std::size_t j = 0; j < basis_.vectors.size(); ++j) {
        const auto& v = basis_.vectors[j];
        if (top >= 0) {
            std::vector<mpq_class> moved(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) moved[face_image[i]] = v[i];
            auto image = c.boundary(top).multiply(moved);
            if (std::any_of(image.begin(), image.end(), [](const mpq_class& x) { return x != 0; }))
                throw ConsistencyError("permuted cycle left the kernel of the top boundary");
        }
        total += v[face_preimage[basis_.free_columns[j]]];
    }
    total.canonicalize();
    if (total.get_den() != 1)
        throw ConsistencyError("non-integral trace " + total.get_str() + " on top homology");
    return total.get_num();
}

mpz_class top_homology_trace(const OrderComplex& c, const Permutation& g) {
    auto image = induced_flat_permutation(c.lattice(), g);
    if (!image) throw DomainError("permutation is not an automorphism of the lattice of flats");
    return TopHomology(c).trace(*image);
}

long lefschetz_number(const OrderComplex& c, const std::vector<std::size_t>& flat_image) {
    long total = 0;
    for (int d = -1; d <= c.top_dimension(); ++d) {
        long fixed = 0;
        for (const Chain& face : c.faces(d)) {
            bool all = std::all_of(face.begin(), face.end(), [&](std::size_t f) { return flat_image[f] == f; });
            if (all) ++fixed;
        }
        total += (d % 2 == 0 ? 1 : -1) * fixed;
    }
    return total;
}

}  // namespace chowgamma
