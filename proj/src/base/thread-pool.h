// base/thread-pool.h

// Copyright 2026  Waveclass Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef WAVECLASS_BASE_THREAD_POOL_H_
#define WAVECLASS_BASE_THREAD_POOL_H_

#include <functional>

namespace waveclass {

// Runs fn(0) .. fn(n_tasks-1) on up to `workers` threads.  Tasks must be
// independent and write only to their own slots, so the result is identical
// for any worker count.  The first exception thrown by a task is rethrown in
// the caller after all threads join.
void RunParallel(int n_tasks, int workers, const std::function<void(int)> &fn);

}  // namespace waveclass

#endif  // WAVECLASS_BASE_THREAD_POOL_H_
