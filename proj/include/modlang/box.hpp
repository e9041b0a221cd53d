#pragma once

#include <memory>
#include <type_traits>
#include <utility>

namespace modlang {

/// Immutable heap cell with value semantics: copies share, equality is deep.
/// Lets recursive variants (derivation trees, monolithic terms) hold
/// themselves without exposing pointers.
template <class T>
class Box {
public:
    Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

    /// Anything that converts to T, so `Box<Typing>` accepts a rule directly.
    template <class U>
        requires(!std::is_same_v<std::remove_cvref_t<U>, Box> && !std::is_same_v<std::remove_cvref_t<U>, T> &&
                 std::is_convertible_v<U, T>)
    Box(U&& u) : Box(T(std::forward<U>(u))) {}

    const T& get() const { return *ptr_; }
    const T& operator*() const { return *ptr_; }
    const T* operator->() const { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b) {
        return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
    }

private:
    std::shared_ptr<const T> ptr_;
};

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

} // namespace modlang
