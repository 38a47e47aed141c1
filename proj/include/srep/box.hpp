#pragma once

#include <memory>
#include <utility>

namespace srep {

// Heap cell with value semantics, used to break recursion in variant types.
template <typename T>
class box {
public:
    box(T value) : cell_(std::make_unique<T>(std::move(value))) {}
    box(const box& other) : cell_(std::make_unique<T>(*other.cell_)) {}
    box(box&&) noexcept = default;
    box& operator=(const box& other) {
        cell_ = std::make_unique<T>(*other.cell_);
        return *this;
    }
    box& operator=(box&&) noexcept = default;

    const T& operator*() const { return *cell_; }
    T& operator*() { return *cell_; }
    const T* operator->() const { return cell_.get(); }
    T* operator->() { return cell_.get(); }

private:
    std::unique_ptr<T> cell_;
};

} // namespace srep
