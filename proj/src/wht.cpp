#include "whufft/wht.hpp"

namespace whufft {

std::string_view to_string(WhtAlgo a) {
  switch (a) {
    case WhtAlgo::Naive: return "naive";
    case WhtAlgo::Folklore: return "folklore";
    case WhtAlgo::H4: return "h4";
    case WhtAlgo::H8: return "h8";
  }
  return "?";
}

}  // namespace whufft
