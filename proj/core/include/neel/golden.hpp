#pragma once

#include <string>
#include <vector>

namespace neel {

// One frozen regression bound. Asymptotic remainders have known orders but
// unknown constants, so the bound is measured once against the direct
// solvers, written down, and enforced on every later run.
struct GoldenEntry {
  std::string name;
  std::string parameters;
  double value = 0.0;      // measured residual at record time
  double tolerance = 0.0;  // frozen regression bound
};

class GoldenStore {
 public:
  // Loads the file if present; a missing file is an empty store (first
  // run records). A malformed line throws std::runtime_error naming the
  // file and line.
  explicit GoldenStore(std::string path);

  // Directory resolution: $NEEL_LAB_GOLDEN if set, else "data/golden"
  // relative to the working directory.
  static std::string default_dir();

  const std::string& path() const { return path_; }
  bool has(const std::string& name, const std::string& parameters) const;

  // Throws std::runtime_error if the entry is absent.
  GoldenEntry get(const std::string& name, const std::string& parameters) const;

  // Returns the stored entry, first recording (value, tolerance) and
  // rewriting the file if no entry exists yet.
  GoldenEntry record_or_get(const std::string& name,
                            const std::string& parameters, double value,
                            double tolerance);

 private:
  void save() const;

  std::string path_;
  std::vector<GoldenEntry> entries_;
};

}  // namespace neel
