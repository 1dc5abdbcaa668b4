#include "orderforge/util.hpp"

namespace orderforge {

const char* err_name(Err k) {
  switch (k) {
    case Err::CycleDetected: return "CycleDetected";
    case Err::DuplicateElement: return "DuplicateElement";
    case Err::UnknownElement: return "UnknownElement";
    case Err::EmptyPoset: return "EmptyPoset";
    case Err::EmptyInput: return "EmptyInput";
    case Err::NotComparable: return "NotComparable";
    case Err::OverlappingGroundSets: return "OverlappingGroundSets";
    case Err::NonPositive: return "NonPositive";
    case Err::TooSmall: return "TooSmall";
    case Err::NotConnected: return "NotConnected";
    case Err::NotMinimal: return "NotMinimal";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NotPlanar: return "NotPlanar";
    case Err::InvalidEmbedding: return "InvalidEmbedding";
    case Err::NotDoublyExposed: return "NotDoublyExposed";
    case Err::NotInTree: return "NotInTree";
    case Err::Disconnected: return "Disconnected";
    case Err::PigeonholeFailed: return "PigeonholeFailed";
    case Err::ConstructionFailed: return "ConstructionFailed";
    case Err::ModelInvalid: return "ModelInvalid";
    case Err::InternalCheck: return "InternalCheck";
    case Err::BadInput: return "BadInput";
  }
  return "Error";
}

int Bits::count() const {
  int c = 0;
  for (auto w : w_) c += __builtin_popcountll(w);
  return c;
}

Bits& Bits::operator|=(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bits& Bits::subtract(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

bool Bits::intersects(const Bits& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool Bits::subset_of(const Bits& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

std::vector<int> Bits::to_vector() const {
  std::vector<int> v;
  for_each([&](int i) { v.push_back(i); });
  return v;
}

}  // namespace orderforge
