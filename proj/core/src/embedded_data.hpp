#pragma once

#include <string_view>

namespace ezeta::detail {

std::string_view embedded_stieltjes();
std::string_view embedded_published_tables();

}  // namespace ezeta::detail
