#include "parcurve/error.hpp"

namespace parcurve {

const char* errc_name(errc code) {
  switch (code) {
    case errc::domain: return "domain";
    case errc::boundary: return "boundary";
    case errc::accuracy: return "accuracy";
    case errc::regularity: return "regularity";
    case errc::sampling: return "sampling";
    case errc::precision: return "precision";
    case errc::degenerate_offset: return "degenerate_offset";
    case errc::branch: return "branch";
    case errc::singularity: return "singularity";
    case errc::inflection: return "inflection";
    case errc::hypothesis: return "hypothesis";
    case errc::simplicity: return "simplicity";
    case errc::degeneracy: return "degeneracy";
    case errc::io: return "io";
  }
  return "unknown";
}

}  // namespace parcurve
