#ifndef TRANSLATIONESE_VERSION_HPP
#define TRANSLATIONESE_VERSION_HPP

namespace translationese {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace translationese

#endif
